#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"

using namespace hyperalpha;

namespace {

void expect_feasible(const EvalPoint& x, Vertex fixed, std::size_t m) {
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_GE(x[i], 0.0);
    total += std::pow(x[i], static_cast<double>(m));
  }
  EXPECT_EQ(x[fixed], 0.0);
  EXPECT_NEAR(total, 1.0, 1e-9);
}

}  // namespace

TEST(Solver, SingleEdge) {
  auto h = build(3, {{1, 2, 3}});
  auto r = analytic_connectivity(h);
  EXPECT_NEAR(r.alpha, 1.0, 1e-9);
  expect_feasible(r.witness, r.fixed_vertex, 3);
}

TEST(Solver, DisconnectedIsZero) {
  auto h = build(4, {{1, 2}, {3, 4}});
  auto r = analytic_connectivity(h);
  EXPECT_NEAR(r.alpha, 0.0, 1e-12);
  EXPECT_EQ(r.fixed_vertex, 0u);
  // the witness lives on the component avoiding vertex 1
  EXPECT_EQ(r.witness[0], 0.0);
  EXPECT_EQ(r.witness[1], 0.0);
  EXPECT_GT(r.witness[2], 0.0);
}

TEST(Solver, IsolatedVertexGivesZero) {
  auto r = analytic_connectivity(build(3, {{1, 2}}));
  EXPECT_NEAR(r.alpha, 0.0, 1e-12);
}

TEST(Solver, TriangleFixedVertex) {
  auto h = build(3, {{1, 2}, {2, 3}, {1, 3}});
  auto r = minimize_fixed_zero(h, 2);
  EXPECT_NEAR(r.value, 1.0, 1e-9);
  EXPECT_NEAR(r.witness[0], std::sqrt(0.5), 1e-4);
  EXPECT_NEAR(r.witness[1], std::sqrt(0.5), 1e-4);
  EXPECT_EQ(r.witness[2], 0.0);
}

TEST(Solver, TwoEdgesSharingAVertex) {
  auto h = build(5, {{1, 2, 3}, {3, 4, 5}});
  auto r = analytic_connectivity(h);
  auto g = grid_oracle(h, 24, 20);
  EXPECT_NEAR(r.alpha, g.value, 1e-6);
  EXPECT_LT(r.alpha, 1.0 / 3.0);
}

TEST(Solver, WitnessesAreFeasibleAndValuesConsistent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    auto h = oracle::random_hypergraph(n, 3, 5, rng);
    SolverConfig cfg;
    cfg.restarts = 6;
    auto r = analytic_connectivity(h, cfg);
    expect_feasible(r.witness, r.fixed_vertex, h.max_edge_size());
    EXPECT_NEAR(laplacian_form(h, r.witness), r.alpha, 1e-9);
    EXPECT_EQ(r.per_vertex.size(), n);
    EXPECT_DOUBLE_EQ(*std::min_element(r.per_vertex.begin(), r.per_vertex.end()), r.alpha);
    EXPECT_EQ(static_cast<std::size_t>(std::min_element(r.per_vertex.begin(), r.per_vertex.end()) -
                                       r.per_vertex.begin()),
              r.fixed_vertex);
  }
}

TEST(Solver, DeterministicForFixedSeed) {
  auto h = build(6, {{1, 2, 3}, {3, 4}, {4, 5, 6}, {1, 6}});
  SolverConfig cfg;
  cfg.seed = 99;
  auto a = analytic_connectivity(h, cfg);
  auto b = analytic_connectivity(h, cfg);
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_EQ(a.witness.vector(), b.witness.vector());
  EXPECT_EQ(a.per_vertex, b.per_vertex);
}

TEST(Solver, InvariantUnderRelabeling) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 4 + rng() % 3;
    auto h = oracle::random_hypergraph(n, 3, 5, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const double a = analytic_connectivity(h).alpha;
    const double b = analytic_connectivity(relabel(h, perm)).alpha;
    EXPECT_NEAR(a, b, 1e-9) << serialize(h);
  }
}

TEST(Solver, AgreesWithGridOracle) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3 + rng() % 3;
    auto h = oracle::random_hypergraph(n, 3, 5, rng);
    const double solver = analytic_connectivity(h).alpha;
    const double grid = grid_oracle(h, 20, 20).value;
    EXPECT_NEAR(solver, grid, 1e-3) << serialize(h);
  }
}

TEST(Solver, Errors) {
  EXPECT_THROW(analytic_connectivity(build(3, {})), Error);
  try {
    analytic_connectivity(build(3, {}));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoEdges);
  }
  SolverConfig bad;
  bad.shrink = 1.5;
  EXPECT_THROW(analytic_connectivity(build(2, {{1, 2}}), bad), Error);
  EXPECT_THROW(minimize_fixed_zero(build(2, {{1, 2}}), 5), Error);
}

TEST(GridOracle, Examples) {
  EXPECT_NEAR(grid_oracle(build(3, {{1, 2, 3}}), 10, 0).value, 1.0, 1e-12);
  EXPECT_NEAR(grid_oracle(build(3, {{1, 2}, {2, 3}, {1, 3}}), 20, 5).value, 1.0, 1e-3);
  EXPECT_NEAR(grid_oracle(build(2, {{1, 2}}), 4, 0).value, 1.0, 1e-12);
}

TEST(GridOracle, NeverBelowSolverByMuch) {
  // both are upper estimates of the same minimum; the solver should not lose
  auto h = build(4, {{1, 2, 3}, {2, 3, 4}});
  EXPECT_LE(analytic_connectivity(h).alpha, grid_oracle(h, 24, 20).value + 1e-9);
}

TEST(GridOracle, Guards) {
  try {
    grid_oracle(build(8, {{1, 2}}), 4, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InstanceTooLarge);
    EXPECT_TRUE(e.is_guard());
  }
  EXPECT_THROW(grid_oracle(build(3, {}), 4, 0), Error);
}
