#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace hyperalpha;

TEST(Boundary, Examples) {
  auto h = build(5, {{1, 2, 3}, {3, 4, 5}});
  std::vector<Vertex> s{0, 1};
  EXPECT_EQ(boundary(h, s), (std::vector<std::size_t>{0}));
  std::vector<Vertex> t{2};
  EXPECT_EQ(boundary(h, t), (std::vector<std::size_t>{0, 1}));
  std::vector<Vertex> whole{0, 1, 2, 3, 4};
  EXPECT_TRUE(boundary(h, whole).empty());
}

TEST(Isoperimetric, Examples) {
  auto single = isoperimetric_number(build(3, {{1, 2, 3}}));
  EXPECT_EQ(single.value, Rational::make(1, 1));
  EXPECT_EQ(single.witness_set, (std::vector<Vertex>{0}));

  auto triangle = isoperimetric_number(build(3, {{1, 2}, {2, 3}, {1, 3}}));
  EXPECT_EQ(triangle.value, Rational::make(2, 1));

  auto two = isoperimetric_number(build(5, {{1, 2, 3}, {3, 4, 5}}));
  EXPECT_EQ(two.value, Rational::make(1, 2));
  EXPECT_EQ(two.witness_set, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(two.boundary_size, 1u);

  auto split = isoperimetric_number(build(4, {{1, 2}, {3, 4}}));
  EXPECT_EQ(split.value.num, 0u);
}

TEST(Isoperimetric, MatchesExplicitSubsetOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 11;
    auto h = oracle::random_hypergraph(n, 5, 12, rng);
    const auto lib = isoperimetric_number(h);
    const auto ref = oracle::isoperimetric(h);
    EXPECT_EQ(lib.value, Rational::make(ref.num, ref.den)) << serialize(h);
    EXPECT_EQ(lib.witness_set, ref.set) << serialize(h);
  }
}

TEST(Isoperimetric, AtMostMaxDegree) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng() % 8;
    auto h = oracle::random_hypergraph(n, 4, 10, rng);
    EXPECT_LE(isoperimetric_number(h).value.value(), static_cast<double>(degree_profile(h).max_degree));
  }
}

TEST(Isoperimetric, Guards) {
  EXPECT_THROW(isoperimetric_number(build(3, {})), Error);
  try {
    isoperimetric_number(build(25, {{1, 2}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InstanceTooLarge);
  }
}

TEST(CliqueExpansion, Examples) {
  auto g = clique_expansion(build(4, {{1, 2, 3}, {2, 3}, {3, 4}}));
  EXPECT_EQ(g.num_edges(), 4u);  // 12 13 23 34, the repeated 23 collapses
  EXPECT_EQ(g.degrees(), (std::vector<std::size_t>{2, 2, 3, 1}));
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(build(3, {{1, 2, 3}})), Diameter{1});
  EXPECT_EQ(diameter(build(5, {{1, 2, 3}, {3, 4, 5}})), Diameter{2});
  EXPECT_EQ(diameter(build(4, {{1, 2}, {3, 4}})), std::nullopt);
  EXPECT_EQ(diameter(build(1, {})), Diameter{0});
}

TEST(Diameter, MatchesFloydWarshall) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    auto h = oracle::random_hypergraph(n, 4, 8, rng);
    const auto lib = diameter(h);
    const auto ref = oracle::diameter(h);
    if (ref == SIZE_MAX)
      EXPECT_FALSE(lib.has_value());
    else
      EXPECT_EQ(lib, Diameter{ref});
  }
}

TEST(Bfs, DistancesAreSymmetric) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(9, 0.3, rng);
    std::vector<std::vector<Vertex>> adjacency(9);
    for (const auto& [u, v] : g.edges()) {
      adjacency[u].push_back(v);
      adjacency[v].push_back(u);
    }
    std::vector<std::vector<std::size_t>> d;
    for (Vertex s = 0; s < 9; ++s) d.push_back(bfs_distances(adjacency, s));
    for (Vertex a = 0; a < 9; ++a)
      for (Vertex b = 0; b < 9; ++b) EXPECT_EQ(d[a][b], d[b][a]);
  }
}

TEST(Lambda2, Examples) {
  EXPECT_NEAR(lambda2(Graph(2, {{0, 1}})), 2.0, 1e-10);
  EXPECT_NEAR(lambda2(Graph(3, {{0, 1}, {1, 2}})), 1.0, 1e-10);
  EXPECT_NEAR(lambda2(Graph(3, {{0, 1}, {1, 2}, {0, 2}})), 3.0, 1e-10);
  EXPECT_NEAR(lambda2(Graph(4, {{0, 1}, {2, 3}})), 0.0, 1e-10);
  // cycle C_n: 2 − 2cos(2π/n)
  std::vector<Graph::Pair> cycle;
  for (Vertex i = 0; i < 7; ++i) cycle.emplace_back(i, (i + 1) % 7);
  EXPECT_NEAR(lambda2(Graph(7, cycle)), 2.0 - 2.0 * std::cos(2.0 * M_PI / 7.0), 1e-9);
}

TEST(Lambda2, QuotientNeverBelow) {
  std::mt19937_64 rng(25);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(8, 0.4, rng);
    const double l2 = lambda2(g);
    for (int k = 0; k < 20; ++k) {
      std::vector<double> x(8);
      for (double& v : x) v = normal(rng);
      EXPECT_GE(fiedler_quotient(g, x), l2 - 1e-9);
    }
  }
}

TEST(Lambda2, MatchesOptimizedQuotient) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    auto g = oracle::random_connected_graph(n, 0.5, rng);
    EXPECT_NEAR(lambda2(g), oracle::minimize_fiedler_quotient(g, rng), 1e-6);
  }
}

TEST(FiedlerQuotient, ExamplesAndErrors) {
  Graph path(3, {{0, 1}, {1, 2}});
  std::vector<double> fiedler{1.0, 0.0, -1.0};
  EXPECT_NEAR(fiedler_quotient(path, fiedler), 1.0, 1e-12);
  std::vector<double> constant{2.0, 2.0, 2.0};
  try {
    fiedler_quotient(path, constant);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConstantVector);
  }
}

TEST(Graph, Validation) {
  EXPECT_THROW(Graph(3, {{0, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 3}}), Error);
}
