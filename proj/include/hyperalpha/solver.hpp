#ifndef HYPERALPHA_SOLVER_HPP
#define HYPERALPHA_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "hyperalpha/generate.hpp"
#include "hyperalpha/hypergraph.hpp"
#include "hyperalpha/tensor_forms.hpp"

namespace hyperalpha {

struct SolverConfig {
  std::size_t restarts = 16;
  std::size_t max_iterations = 10'000;
  double objective_tolerance = 1e-10;
  double initial_step = 1.0;
  double shrink = 0.5;
  std::uint64_t seed = 0;

  void validate() const {
    if (restarts < 1) throw Error(ErrorCode::InvalidArgument, "restarts must be at least 1");
    if (max_iterations < 1) throw Error(ErrorCode::InvalidArgument, "max_iterations must be at least 1");
    if (!(objective_tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "objective_tolerance must be positive");
    if (!(initial_step > 0.0)) throw Error(ErrorCode::InvalidArgument, "initial_step must be positive");
    if (!(shrink > 0.0 && shrink < 1.0)) throw Error(ErrorCode::InvalidArgument, "shrink must lie in (0, 1)");
  }
};

/// Outcome of one fixed-vertex problem min{𝓛x^m : x ≥ 0, Σx_i^m = 1, x_j = 0}.
struct FixedZeroResult {
  double value = 0.0;
  EvalPoint witness;
  std::vector<bool> converged;  // one flag per run
  std::vector<double> run_values;
};

/// Estimate of the analytic connectivity. `alpha` is the best objective value
/// found, hence an upper estimate of the true minimum.
struct AlphaResult {
  double alpha = 0.0;
  std::vector<double> per_vertex;
  EvalPoint witness;
  Vertex fixed_vertex = 0;  // 0-based
  std::vector<std::vector<bool>> converged;

  bool all_converged() const {
    return std::all_of(converged.begin(), converged.end(),
                       [](const auto& runs) { return std::all_of(runs.begin(), runs.end(), [](bool b) { return b; }); });
  }
};

namespace detail {

/// Scales x onto the unit m-norm sphere Σx_i^m = 1; false if x is (numerically) zero.
inline bool normalize_m(std::vector<double>& x, std::size_t m) {
  double norm = 0.0;
  for (double v : x) norm += ipow(v, m);
  if (!(norm > 0.0) || !std::isfinite(norm)) return false;
  const double scale = 1.0 / std::pow(norm, 1.0 / static_cast<double>(m));
  for (double& v : x) v *= scale;
  return true;
}

inline std::vector<double> uniform_on(std::span<const Vertex> support, std::size_t n) {
  std::vector<double> x(n, 0.0);
  for (auto v : support) x[v] = 1.0;
  return x;
}

struct RunOutcome {
  double value;
  std::vector<double> x;
  bool converged;
};

/// Projected gradient on the quotient 𝓛x^m / Σx_i^m: step along the negative
/// gradient, clamp negative coordinates, zero the fixed vertex, renormalize.
/// Backtracking halves the step until the objective strictly decreases.
inline RunOutcome descend(const LaplacianForm& form, std::vector<double> x, Vertex fixed, const SolverConfig& config) {
  const std::size_t n = form.dimension();
  const std::size_t m = form.order();
  const double m_real = static_cast<double>(m);
  constexpr int kMaxHalvings = 40;
  constexpr double kArmijo = 1e-4;
  // values this small are below the rounding level of the form
  constexpr double kNegligible = 1e-18;
  constexpr double kSnap = 1e-3;

  x[fixed] = 0.0;
  if (!normalize_m(x, m)) return {std::numeric_limits<double>::infinity(), x, false};
  double f = form.value(x);

  std::vector<double> grad(n), direction(n), trial(n);
  double step = config.initial_step;
  for (std::size_t it = 0; it < config.max_iterations; ++it) {
    form.gradient(x, grad);
    double largest = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double g = grad[i] - m_real * f * ipow(x[i], m - 1);
      if (i == fixed || (x[i] <= 0.0 && g > 0.0)) g = 0.0;  // cannot move against the bound
      direction[i] = g;
      largest = std::max(largest, std::abs(g));
    }
    if (largest == 0.0) return {f, x, true};

    // Near a degenerate minimum the pull on a vanishing coordinate decays
    // like x_i^{m-1}; try setting such coordinates to zero outright.
    const double top = *std::max_element(x.begin(), x.end());
    double snapped_mass = 0.0;
    trial = x;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] > 0.0 && direction[i] > 0.0 && x[i] < kSnap * top) {
        snapped_mass += direction[i] * x[i];
        trial[i] = 0.0;
      }
    }
    if (snapped_mass > 0.0 && normalize_m(trial, m)) {
      const double f_snap = form.value(trial);
      if (f_snap < f && f - f_snap >= kArmijo * snapped_mass) {
        const double previous = f;
        x.swap(trial);
        f = f_snap;
        if (previous - f <= config.objective_tolerance * previous || f <= kNegligible) return {f, x, true};
        continue;
      }
    }

    bool accepted = false;
    int halvings = 0;
    double f_trial = f;
    for (; halvings < kMaxHalvings; ++halvings, step *= config.shrink) {
      // Armijo test on the projected displacement
      double predicted = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        trial[i] = i == fixed ? 0.0 : std::max(0.0, x[i] - step * direction[i]);
        predicted += direction[i] * (x[i] - trial[i]);
      }
      if (!normalize_m(trial, m)) continue;  // collapsed to zero
      f_trial = form.value(trial);
      if (f_trial < f && f - f_trial >= kArmijo * predicted) {
        accepted = true;
        break;
      }
    }
    if (!accepted) return {f, x, true};

    const double decrease = f - f_trial;
    x.swap(trial);
    const double previous = f;
    f = f_trial;
    if (decrease <= config.objective_tolerance * previous || f <= kNegligible) return {f, x, true};
    if (halvings == 0) step /= config.shrink;
  }
  return {f, x, false};
}

inline std::vector<std::vector<double>> restart_points(const Hypergraph& h, Vertex fixed, const SolverConfig& config,
                                                       std::mt19937_64& rng) {
  const std::size_t n = h.num_vertices();
  std::vector<std::vector<double>> starts;

  std::vector<Vertex> others;
  for (Vertex v = 0; v < n; ++v)
    if (v != fixed) others.push_back(v);
  starts.push_back(uniform_on(others, n));

  for (const auto& component : connected_components(h))
    if (!std::binary_search(component.begin(), component.end(), fixed)) starts.push_back(uniform_on(component, n));

  for (const auto& e : h.edges())
    if (!std::binary_search(e.begin(), e.end(), fixed)) starts.push_back(uniform_on(e, n));

  std::exponential_distribution<double> exponential(1.0);
  for (std::size_t r = starts.size(); r < config.restarts; ++r) {
    std::vector<double> x(n, 0.0);
    for (auto v : others) x[v] = exponential(rng);
    starts.push_back(std::move(x));
  }
  return starts;
}

inline FixedZeroResult minimize_fixed_zero(const Hypergraph& h, const LaplacianForm& form, Vertex fixed,
                                           const SolverConfig& config) {
  std::mt19937_64 rng(derive_seed(config.seed, fixed));
  FixedZeroResult result;
  result.value = std::numeric_limits<double>::infinity();
  std::vector<double> best;
  for (auto& start : restart_points(h, fixed, config, rng)) {
    auto run = descend(form, std::move(start), fixed, config);
    result.converged.push_back(run.converged);
    result.run_values.push_back(run.value);
    if (run.value < result.value) {
      result.value = run.value;
      best = std::move(run.x);
    }
  }
  result.witness = EvalPoint(std::move(best));
  return result;
}

}  // namespace detail

/// Minimizes 𝓛x^m over {x ≥ 0, Σx_i^m = 1, x_fixed = 0} from several starts.
/// `fixed` is 0-based. Non-convergence shows up in the flags, never as an error.
inline FixedZeroResult minimize_fixed_zero(const Hypergraph& h, Vertex fixed, const SolverConfig& config = {}) {
  config.validate();
  if (fixed >= h.num_vertices()) throw Error(ErrorCode::InvalidArgument, "fixed vertex out of range");
  if (h.num_vertices() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two vertices");
  const LaplacianForm form(h);
  return detail::minimize_fixed_zero(h, form, fixed, config);
}

/// α(H) = min_j min{𝓛x^m : x ≥ 0, Σx_i^m = 1, x_j = 0}, estimated from above.
/// Ties across j resolve to the smallest j.
inline AlphaResult analytic_connectivity(const Hypergraph& h, const SolverConfig& config = {}) {
  config.validate();
  if (h.num_edges() == 0) throw Error(ErrorCode::NoEdges, "analytic connectivity needs at least one edge");
  if (h.num_vertices() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two vertices");
  const LaplacianForm form(h);
  AlphaResult result;
  result.alpha = std::numeric_limits<double>::infinity();
  for (Vertex j = 0; j < h.num_vertices(); ++j) {
    auto fixed = detail::minimize_fixed_zero(h, form, j, config);
    result.per_vertex.push_back(fixed.value);
    result.converged.push_back(std::move(fixed.converged));
    if (fixed.value < result.alpha) {
      result.alpha = fixed.value;
      result.fixed_vertex = j;
      result.witness = std::move(fixed.witness);
    }
  }
  return result;
}

struct GridOracleResult {
  double value = std::numeric_limits<double>::infinity();
  EvalPoint witness;
  Vertex fixed_vertex = 0;
};

namespace detail {

/// Compass search on the simplex {y ≥ 0, Σy = 1, y_fixed = 0}, x = y^{1/m}.
class SimplexSearch {
 public:
  SimplexSearch(const LaplacianForm& form, Vertex fixed) : form_(form), fixed_(fixed), x_(form.dimension()) {}

  double evaluate(const std::vector<double>& y) {
    const double inv_m = 1.0 / static_cast<double>(form_.order());
    for (std::size_t i = 0; i < y.size(); ++i) x_[i] = y[i] > 0.0 ? std::pow(y[i], inv_m) : 0.0;
    return form_.value(x_);
  }

  /// Moves mass `delta` between coordinate pairs while that improves the
  /// objective; returns the final value.
  double refine(std::vector<double>& y, double value, double delta) {
    const std::size_t n = y.size();
    for (int sweep = 0; sweep < 10'000; ++sweep) {
      bool improved = false;
      for (std::size_t from = 0; from < n; ++from) {
        if (from == fixed_ || y[from] <= 0.0) continue;
        for (std::size_t to = 0; to < n; ++to) {
          if (to == fixed_ || to == from) continue;
          const double amount = std::min(delta, y[from]);
          const double saved_from = y[from], saved_to = y[to];
          y[from] -= amount;
          y[to] += amount;
          const double candidate = evaluate(y);
          if (candidate < value) {
            value = candidate;
            improved = true;
            if (y[from] <= 0.0) break;
          } else {
            y[from] = saved_from;
            y[to] = saved_to;
          }
        }
      }
      if (!improved) break;
    }
    return value;
  }

  std::vector<double> to_point(const std::vector<double>& y) {
    evaluate(y);
    return x_;
  }

 private:
  const LaplacianForm& form_;
  Vertex fixed_;
  std::vector<double> x_;
};

}  // namespace detail

/// Independent upper estimate of α: scans the lattice {y ≥ 0, Σy = 1, y_j = 0}
/// with denominator `steps` for every j, maps x_i = y_i^{1/m}, then refines
/// the best lattice point of each j by compass search whose step halves each
/// round. Guarded to n ≤ 7.
inline GridOracleResult grid_oracle(const Hypergraph& h, std::size_t steps, std::size_t refine_rounds) {
  const std::size_t n = h.num_vertices();
  if (n > 7) throw Error(ErrorCode::InstanceTooLarge, "grid oracle limited to n <= 7");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "need at least two vertices");
  if (h.num_edges() == 0) throw Error(ErrorCode::NoEdges, "grid oracle needs at least one edge");
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be positive");
  if (binomial(steps + n - 2, n - 2) > 20'000'000)
    throw Error(ErrorCode::InstanceTooLarge, "grid too fine for this many vertices");

  const LaplacianForm form(h);
  const double q = static_cast<double>(steps);
  GridOracleResult result;
  for (Vertex fixed = 0; fixed < n; ++fixed) {
    detail::SimplexSearch search(form, fixed);
    std::vector<Vertex> free;
    for (Vertex v = 0; v < n; ++v)
      if (v != fixed) free.push_back(v);

    // every composition of `steps` into |free| nonnegative parts
    std::vector<double> y(n, 0.0), best_y;
    double best = std::numeric_limits<double>::infinity();
    auto visit = [&](auto& self, std::size_t slot, std::size_t remaining) -> void {
      if (slot + 1 == free.size()) {
        y[free[slot]] = static_cast<double>(remaining) / q;
        if (const double value = search.evaluate(y); value < best) {
          best = value;
          best_y = y;
        }
        return;
      }
      for (std::size_t c = 0; c <= remaining; ++c) {
        y[free[slot]] = static_cast<double>(c) / q;
        self(self, slot + 1, remaining - c);
      }
    };
    visit(visit, 0, steps);

    double delta = 1.0 / q;
    best = search.refine(best_y, best, delta);
    for (std::size_t round = 0; round < refine_rounds; ++round) {
      delta *= 0.5;
      best = search.refine(best_y, best, delta);
    }
    if (best < result.value) {
      result.value = best;
      result.fixed_vertex = fixed;
      result.witness = EvalPoint(search.to_point(best_y));
    }
  }
  return result;
}

}  // namespace hyperalpha

#endif  // HYPERALPHA_SOLVER_HPP
