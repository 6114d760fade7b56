#ifndef HYPERALPHA_BOUNDS_HPP
#define HYPERALPHA_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperalpha/combinatorics.hpp"
#include "hyperalpha/hypergraph.hpp"
#include "hyperalpha/solver.hpp"

namespace hyperalpha {

inline constexpr double kClosedFormTolerance = 1e-6;
inline constexpr double kOracleTolerance = 1e-3;

enum class CheckStatus { Holds, Violated, NotApplicable };

constexpr std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Holds: return "holds";
    case CheckStatus::Violated: return "violated";
    case CheckStatus::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

/// One inequality lhs ≤ rhs. slack = rhs − lhs; the check holds iff
/// slack ≥ −tolerance. Lower bounds put the bound on the left, upper bounds
/// on the right.
struct Check {
  std::string name;
  CheckStatus status = CheckStatus::NotApplicable;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  std::string reason;  // why a check was skipped

  static Check evaluate(std::string name, double lhs, double rhs, double tolerance) {
    Check c{std::move(name), CheckStatus::Holds, lhs, rhs, rhs - lhs, tolerance, {}};
    if (!(c.slack >= -tolerance)) c.status = CheckStatus::Violated;
    return c;
  }

  static Check skipped(std::string name, std::string reason) {
    Check c;
    c.name = std::move(name);
    c.reason = std::move(reason);
    return c;
  }
};

// ---------------------------------------------------------------------------
// Closed-form bounds from plain numbers.

/// α ≥ 4·s_min / (n²·m·(m−1)·diam).
inline double diameter_lower_formula(std::size_t n, std::size_t m, std::size_t s_min, std::size_t diam) {
  const double nn = static_cast<double>(n);
  const double mm = static_cast<double>(m);
  return 4.0 * static_cast<double>(s_min) / (nn * nn * mm * (mm - 1.0) * static_cast<double>(diam));
}

struct CheegerInterval {
  double lower = 0.0;
  double upper = 0.0;
};

/// (s_min/m)(Δ − √(Δ² − i²)) ≤ α ≤ (m/2)·i.
inline CheegerInterval cheeger_formula(std::size_t m, std::size_t s_min, std::size_t max_degree, double iso) {
  const double mm = static_cast<double>(m);
  const double delta = static_cast<double>(max_degree);
  const double radicand = std::max(0.0, delta * delta - iso * iso);
  return {static_cast<double>(s_min) / mm * (delta - std::sqrt(radicand)), mm / 2.0 * iso};
}

// k-uniform specializations, kept as separate code paths for the reduction check.

inline double uniform_diameter_lower_formula(std::size_t n, std::size_t k, std::size_t diam) {
  const double nn = static_cast<double>(n);
  return 4.0 / (nn * nn * (static_cast<double>(k) - 1.0) * static_cast<double>(diam));
}

inline double uniform_cheeger_lower_formula(std::size_t max_degree, double iso) {
  const double delta = static_cast<double>(max_degree);
  return delta - std::sqrt(std::max(0.0, delta * delta - iso * iso));
}

inline double uniform_cheeger_upper_formula(std::size_t k, double iso) { return static_cast<double>(k) / 2.0 * iso; }

// ---------------------------------------------------------------------------
// Bounds of a hypergraph.

inline double diameter_lower_bound(const Hypergraph& h) {
  if (h.max_edge_size() < 2) throw Error(ErrorCode::InvalidArgument, "diameter bound needs an edge of size >= 2");
  const auto diam = diameter(h);
  if (!diam) throw Error(ErrorCode::Disconnected, "diameter bound needs a connected hypergraph");
  if (*diam == 0) throw Error(ErrorCode::InvalidArgument, "diameter bound needs at least two vertices");
  return diameter_lower_formula(h.num_vertices(), h.max_edge_size(), h.min_edge_size(), *diam);
}

/// Index of the edge attaining min_e (Σ_{v∈e} d(v) − |e|)/|e|, with its value.
struct DegreeBound {
  double value = 0.0;
  std::size_t edge_index = 0;
};

inline DegreeBound degree_upper_bound_detail(const Hypergraph& h) {
  if (h.num_edges() < 2) throw Error(ErrorCode::TooFewEdges, "degree bound requires more than one edge");
  const auto& d = h.degrees();
  DegreeBound best{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edge(i);
    std::size_t sum = 0;
    for (auto v : e) sum += d[v];
    const double value = static_cast<double>(sum - e.size()) / static_cast<double>(e.size());
    if (value < best.value) best = {value, i};
  }
  return best;
}

inline double degree_upper_bound(const Hypergraph& h) { return degree_upper_bound_detail(h).value; }

inline CheegerInterval cheeger_interval(const Hypergraph& h) {
  const auto iso = isoperimetric_number(h);
  const auto profile = degree_profile(h);
  return cheeger_formula(profile.m, profile.s_min, profile.max_degree, iso.value.value());
}

// ---------------------------------------------------------------------------
// Uniform reduction.

struct UniformReduction {
  std::size_t k = 0;
  std::optional<double> general_diameter, uniform_diameter;
  std::optional<double> general_degree, uniform_degree;
  std::optional<double> general_cheeger_lower, uniform_cheeger_lower;
  std::optional<double> general_cheeger_upper, uniform_cheeger_upper;
  double max_difference = 0.0;

  bool agrees(double tolerance = 1e-12) const { return max_difference <= tolerance; }
};

/// On a k-uniform hypergraph (s_min = m = k) evaluates each general bound and
/// its k-uniform specialization through separate code and records the
/// largest discrepancy.
inline UniformReduction uniform_reduction_check(const Hypergraph& h) {
  if (!h.is_uniform()) throw Error(ErrorCode::NotUniform, "hypergraph is not uniform");
  UniformReduction r;
  r.k = h.max_edge_size();
  const auto profile = degree_profile(h);
  const auto note = [&](const std::optional<double>& a, const std::optional<double>& b) {
    if (a && b) r.max_difference = std::max(r.max_difference, std::abs(*a - *b));
  };

  if (const auto diam = diameter(h); diam && *diam > 0 && r.k >= 2) {
    r.general_diameter = diameter_lower_formula(h.num_vertices(), profile.m, profile.s_min, *diam);
    r.uniform_diameter = uniform_diameter_lower_formula(h.num_vertices(), r.k, *diam);
    note(r.general_diameter, r.uniform_diameter);
  }
  if (h.num_edges() >= 2) {
    r.general_degree = degree_upper_bound(h);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : h.edges()) {
      double sum = 0.0;
      for (auto v : e) sum += static_cast<double>(profile.degrees[v]);
      best = std::min(best, (sum - static_cast<double>(r.k)) / static_cast<double>(r.k));
    }
    r.uniform_degree = best;
    note(r.general_degree, r.uniform_degree);
  }
  if (h.num_vertices() >= 2 && h.num_vertices() <= kMaxIsoperimetricVertices) {
    const double iso = isoperimetric_number(h).value.value();
    const auto general = cheeger_formula(profile.m, profile.s_min, profile.max_degree, iso);
    r.general_cheeger_lower = general.lower;
    r.general_cheeger_upper = general.upper;
    r.uniform_cheeger_lower = uniform_cheeger_lower_formula(profile.max_degree, iso);
    r.uniform_cheeger_upper = uniform_cheeger_upper_formula(r.k, iso);
    note(r.general_cheeger_lower, r.uniform_cheeger_lower);
    note(r.general_cheeger_upper, r.uniform_cheeger_upper);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Ordinary graphs.

struct GraphBoundsReport {
  double lambda2 = 0.0;
  std::size_t diameter = 0;
  Rational iso;
  std::size_t max_degree = 0;
  std::vector<Check> checks;  // asserted relations
  /// λ₂ ≤ min_edges (d_u + d_v − 2)/2: measured only, it is known to fail (P₃).
  std::optional<Check> degree_relation;

  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Holds; });
  }
};

inline GraphBoundsReport graph_bounds_check(const Graph& g, double tolerance = 1e-9) {
  if (g.num_vertices() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two vertices");
  const auto diam = diameter(g);
  if (!diam) throw Error(ErrorCode::Disconnected, "graph bounds need a connected graph");
  const auto h = g.to_hypergraph();
  GraphBoundsReport r;
  r.lambda2 = lambda2(g);
  r.diameter = *diam;
  r.iso = isoperimetric_number(h).value;
  const auto d = g.degrees();
  r.max_degree = *std::max_element(d.begin(), d.end());

  const double n = static_cast<double>(g.num_vertices());
  const double iso = r.iso.value();
  const double delta = static_cast<double>(r.max_degree);
  r.checks.push_back(Check::evaluate("lambda2_diameter_lower", 4.0 / (n * static_cast<double>(*diam)), r.lambda2, tolerance));
  r.checks.push_back(Check::evaluate("cheeger_upper", r.lambda2, 2.0 * iso, tolerance));
  r.checks.push_back(
      Check::evaluate("cheeger_lower", delta - std::sqrt(std::max(0.0, delta * delta - iso * iso)), r.lambda2, tolerance));

  if (g.num_edges() >= 2) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [u, v] : g.edges())
      best = std::min(best, (static_cast<double>(d[u] + d[v]) - 2.0) / 2.0);
    r.degree_relation = Check::evaluate("lambda2_degree_upper", r.lambda2, best, tolerance);
  }
  return r;
}

// ---------------------------------------------------------------------------
// AM–GM gap lemma.

struct AmGmGapResult {
  double arithmetic = 0.0;
  double geometric = 0.0;
  double gap = 0.0;
  double pairwise_bound = 0.0;  // (1/(n(n−1))) Σ_{i<j} (√a_i − √a_j)²
  double paired_bound = 0.0;    // (1/n) Σ_{j≤⌊n/2⌋} (√b_j − √b_{n+1−j})²
  bool pairwise_holds = false;
  bool paired_holds = false;
};

/// `order` is a permutation of 0..n−1 giving b_j = a[order[j]]; identity if empty.
inline AmGmGapResult amgm_gaps(std::span<const double> a, std::span<const std::size_t> order = {}) {
  const std::size_t n = a.size();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "need at least two entries");
  for (double v : a)
    if (!(v > 0.0) || !std::isfinite(v)) throw Error(ErrorCode::NonPositiveEntry, "entries must be positive");
  if (!order.empty()) {
    if (order.size() != n) throw Error(ErrorCode::DimensionMismatch, "permutation length differs");
    std::vector<bool> seen(n, false);
    for (auto i : order) {
      if (i >= n || seen[i]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
      seen[i] = true;
    }
  }

  AmGmGapResult r;
  const double nn = static_cast<double>(n);
  double sum = 0.0, log_sum = 0.0;
  for (double v : a) {
    sum += v;
    log_sum += std::log(v);
  }
  r.arithmetic = sum / nn;
  r.geometric = std::exp(log_sum / nn);
  r.gap = r.arithmetic - r.geometric;

  double pairwise = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::sqrt(a[i]) - std::sqrt(a[j]);
      pairwise += d * d;
    }
  r.pairwise_bound = pairwise / (nn * (nn - 1.0));

  double paired = 0.0;
  const auto b = [&](std::size_t j) { return order.empty() ? a[j] : a[order[j]]; };
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double d = std::sqrt(b(j)) - std::sqrt(b(n - 1 - j));
    paired += d * d;
  }
  r.paired_bound = paired / nn;

  // the gap itself is computed with rounding error of order eps·A
  const double slack = 1e-12 * std::max(1.0, r.arithmetic);
  r.pairwise_holds = r.gap >= r.pairwise_bound - slack;
  r.paired_holds = r.gap >= r.paired_bound - slack;
  return r;
}

// ---------------------------------------------------------------------------
// Full verification report.

/// Test hook: corrupts one bound formula so the harness can be shown to
/// catch a wrong bound. Lower bounds are inflated ×10, upper bounds shrunk ×0.1.
enum class Mutation { None, DiameterLower, DegreeUpper, CheegerLower, CheegerUpper };

struct VerifyConfig {
  SolverConfig solver;
  /// Lower-bound checks need the grid oracle, which is only run up to this size.
  std::size_t oracle_max_vertices = 6;
  std::size_t grid_steps = 24;
  std::size_t grid_refine_rounds = 20;
  double closed_form_tolerance = kClosedFormTolerance;
  double oracle_tolerance = kOracleTolerance;
  Mutation mutation = Mutation::None;
};

struct InstanceSummary {
  std::size_t n = 0;
  std::size_t num_edges = 0;
  std::size_t m = 0;
  std::size_t s_min = 0;
  std::size_t max_degree = 0;
  bool connected = false;
  bool uniform = false;
  bool nested_edges = false;
  bool spanning_edge = false;
};

struct BoundsReport {
  InstanceSummary instance;
  std::vector<Edge> edges;

  std::optional<double> alpha_estimate;  // solver
  std::optional<Vertex> alpha_fixed_vertex;
  std::optional<std::vector<double>> alpha_witness;
  bool solver_converged = false;
  std::optional<double> oracle_alpha;  // grid oracle, small n only
  bool certified = false;              // solver and oracle agree within oracle_tolerance
  std::optional<double> alpha;         // value entering the checks

  Diameter diameter;
  std::optional<CutResult> iso;
  std::optional<double> lambda2_clique;

  std::optional<double> diameter_lower;
  std::optional<double> degree_upper;
  std::optional<std::size_t> degree_upper_edge;
  std::optional<double> cheeger_lower;
  std::optional<double> cheeger_upper;

  std::vector<Check> checks;
  std::vector<std::string> notes;

  std::size_t violations() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Violated; }));
  }

  const Check& check(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw Error(ErrorCode::InvalidArgument, "no check named " + std::string(name));
  }
};

/// Computes α and every combinatorial invariant of `h`, evaluates the bounds
/// and records each inequality. Guards on individual quantities mark the
/// dependent checks not-applicable instead of failing.
inline BoundsReport verify(const Hypergraph& h, const VerifyConfig& config = {}) {
  BoundsReport r;
  const auto profile = degree_profile(h);
  const std::size_t n = h.num_vertices();
  r.instance = {n,
                h.num_edges(),
                profile.m,
                profile.s_min,
                profile.max_degree,
                is_connected(h),
                h.is_uniform(),
                has_nested_edges(h),
                has_spanning_edge(h)};
  r.edges.assign(h.edges().begin(), h.edges().end());
  if (r.instance.nested_edges) r.notes.push_back("nested edges present");
  if (r.instance.spanning_edge) r.notes.push_back("an edge spans every vertex");

  const bool has_edges = h.num_edges() > 0 && n >= 2;
  if (has_edges) {
    const auto alpha = analytic_connectivity(h, config.solver);
    r.alpha_estimate = alpha.alpha;
    r.alpha_fixed_vertex = alpha.fixed_vertex;
    r.alpha_witness = alpha.witness.vector();
    r.solver_converged = alpha.all_converged();
    r.alpha = alpha.alpha;
    if (n <= config.oracle_max_vertices) {
      const auto oracle = grid_oracle(h, config.grid_steps, config.grid_refine_rounds);
      r.oracle_alpha = oracle.value;
      r.certified = std::abs(oracle.value - alpha.alpha) <= config.oracle_tolerance;
      r.alpha = std::min(alpha.alpha, oracle.value);
      if (!r.certified) r.notes.push_back("solver and grid oracle disagree");
    }
  }

  r.diameter = diameter(h);
  if (has_edges && n <= kMaxIsoperimetricVertices) r.iso = isoperimetric_number(h);
  if (n >= 2 && n <= kMaxDenseEigenVertices) r.lambda2_clique = lambda2(clique_expansion(h));

  const auto scaled = [&](Mutation target, double value, double factor) {
    return config.mutation == target ? value * factor : value;
  };
  if (r.diameter && *r.diameter > 0 && profile.m >= 2)
    r.diameter_lower = scaled(Mutation::DiameterLower,
                              diameter_lower_formula(n, profile.m, profile.s_min, *r.diameter), 10.0);
  if (h.num_edges() >= 2) {
    const auto degree = degree_upper_bound_detail(h);
    r.degree_upper = scaled(Mutation::DegreeUpper, degree.value, 0.1);
    r.degree_upper_edge = degree.edge_index;
  }
  if (r.iso) {
    const auto interval = cheeger_formula(profile.m, profile.s_min, profile.max_degree, r.iso->value.value());
    r.cheeger_lower = scaled(Mutation::CheegerLower, interval.lower, 10.0);
    r.cheeger_upper = scaled(Mutation::CheegerUpper, interval.upper, 0.1);
  }

  // diameter lower bound: needs a connected instance and an oracle-certified α
  if (!r.diameter_lower)
    r.checks.push_back(Check::skipped("diameter_lower", r.diameter ? "fewer than two vertices" : "disconnected"));
  else if (!r.certified)
    r.checks.push_back(Check::skipped("diameter_lower", "alpha not oracle-certified"));
  else
    r.checks.push_back(Check::evaluate("diameter_lower", *r.diameter_lower, *r.alpha, config.oracle_tolerance));

  // degree upper bound: any upper estimate of α may be compared
  if (!r.degree_upper)
    r.checks.push_back(Check::skipped("degree_upper", "needs more than one edge"));
  else
    r.checks.push_back(Check::evaluate("degree_upper", *r.alpha, *r.degree_upper, config.closed_form_tolerance));

  // Cheeger interval: stated for m >= 3
  if (profile.m < 3) {
    r.checks.push_back(Check::skipped("cheeger_lower", "largest edge has fewer than 3 vertices"));
    r.checks.push_back(Check::skipped("cheeger_upper", "largest edge has fewer than 3 vertices"));
  } else if (!r.iso) {
    r.checks.push_back(Check::skipped("cheeger_lower", "isoperimetric number unavailable"));
    r.checks.push_back(Check::skipped("cheeger_upper", "isoperimetric number unavailable"));
  } else {
    if (!r.certified)
      r.checks.push_back(Check::skipped("cheeger_lower", "alpha not oracle-certified"));
    else
      r.checks.push_back(Check::evaluate("cheeger_lower", *r.cheeger_lower, *r.alpha, config.oracle_tolerance));
    r.checks.push_back(Check::evaluate("cheeger_upper", *r.alpha, *r.cheeger_upper, config.oracle_tolerance));
  }
  return r;
}

}  // namespace hyperalpha

#endif  // HYPERALPHA_BOUNDS_HPP
