#ifndef HYPERALPHA_TENSOR_FORMS_HPP
#define HYPERALPHA_TENSOR_FORMS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperalpha/hypergraph.hpp"

namespace hyperalpha {

/// Exact count type for surjection numbers. Ω(m, s) ≤ s^m ≤ 24^24 < 2^128.
using Count = unsigned __int128;

/// Largest supported tensor order (largest edge size).
inline constexpr std::size_t kMaxOrder = 24;

inline std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

/// Number of surjective maps from an m-tuple of positions onto an s-set:
/// Ω(m, s) = Σ_{k_1+…+k_s=m, k_j≥1} m!/(k_1!…k_s!).
///
/// Evaluated with the surjection recurrence Ω(j, k) = k·(Ω(j−1, k) + Ω(j−1, k−1)),
/// which only ever adds nonnegative integers; every step is overflow-checked.
inline Count omega(std::size_t m, std::size_t s) {
  if (s < 1 || s > m)
    throw Error(ErrorCode::InvalidOrder, "edge size " + std::to_string(s) + " must lie in [1, " +
                                             std::to_string(m) + "]");
  if (m > kMaxOrder)
    throw Error(ErrorCode::InvalidOrder, "order " + std::to_string(m) + " exceeds the supported maximum " +
                                             std::to_string(kMaxOrder));
  // row[k] = Ω(j, k) for the current tuple length j
  std::vector<Count> row(s + 1, 0);
  row[0] = 1;
  for (std::size_t j = 1; j <= m; ++j) {
    for (std::size_t k = std::min(j, s); k >= 1; --k) {
      Count sum = 0;
      Count product = 0;
      if (__builtin_add_overflow(row[k], row[k - 1], &sum) ||
          __builtin_mul_overflow(static_cast<Count>(k), sum, &product))
        throw Error(ErrorCode::InvalidOrder, "surjection count overflow");
      row[k] = product;
    }
    row[0] = 0;
  }
  return row[s];
}

/// Nonnegative evaluation point. Construction rejects negative or
/// non-finite coordinates.
class EvalPoint {
 public:
  EvalPoint() = default;
  explicit EvalPoint(std::vector<double> x) : x_(std::move(x)) {
    for (std::size_t i = 0; i < x_.size(); ++i)
      if (!(x_[i] >= 0.0) || !std::isfinite(x_[i]))
        throw Error(ErrorCode::NegativeEntry, "coordinate " + std::to_string(i + 1) + " is " + std::to_string(x_[i]));
  }

  std::size_t size() const noexcept { return x_.size(); }
  double operator[](std::size_t i) const { return x_[i]; }
  std::span<const double> values() const noexcept { return x_; }
  const std::vector<double>& vector() const noexcept { return x_; }

 private:
  std::vector<double> x_;
};

/// Per-edge constants of the adjacency tensor: each of the Ω surjective
/// index tuples over an s-edge carries the entry s/Ω.
struct EdgeForm {
  std::size_t s = 0;
  std::size_t m = 0;
  Count omega = 0;
  double weight = 0.0;  // s / Ω

  static EdgeForm make(std::size_t s, std::size_t m) {
    EdgeForm f{s, m, hyperalpha::omega(m, s), 0.0};
    f.weight = static_cast<double>(static_cast<long double>(s) / static_cast<long double>(f.omega));
    return f;
  }

  /// Inclusion–exclusion coefficient (−1)^{s−|T|} of a nonempty subset T.
  int ie_coefficient(std::size_t subset_size) const noexcept { return ((s - subset_size) % 2 == 0) ? 1 : -1; }
};

namespace detail {

/// Repeated squaring; x may be zero.
inline double ipow(double x, std::size_t e) {
  double result = 1.0;
  while (e > 0) {
    if (e & 1u) result *= x;
    x *= x;
    e >>= 1u;
  }
  return result;
}

inline const std::vector<double>& inverse_factorials() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kMaxOrder + 1, 1.0);
    long double f = 1.0L;
    for (std::size_t k = 1; k <= kMaxOrder; ++k) {
      f *= static_cast<long double>(k);
      t[k] = static_cast<double>(1.0L / f);
    }
    return t;
  }();
  return table;
}

inline double factorial(std::size_t k) {
  long double f = 1.0L;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<long double>(i);
  return static_cast<double>(f);
}

/// Truncated product in place: acc ← acc · (Σ_{k=lo}^{deg} v^k/k! t^k) mod t^{deg+1}.
inline void multiply_exponential_factor(std::vector<double>& acc, double v, std::size_t lo) {
  const auto& inv_fact = inverse_factorials();
  const std::size_t deg = acc.size() - 1;
  std::vector<double> factor(deg + 1, 0.0);
  double power = 1.0;
  for (std::size_t k = 0; k <= deg; ++k) {
    if (k >= lo) factor[k] = power * inv_fact[k];
    power *= v;
  }
  for (std::size_t d = deg + 1; d-- > 0;) {
    double sum = 0.0;
    for (std::size_t k = lo; k <= d; ++k) sum += factor[k] * acc[d - k];
    acc[d] = sum;
  }
}

/// Sum over surjective m-tuples onto the given values of the product of the
/// chosen values. Equals m!·[t^m] Π_i (e^{v_i t} − 1); every term of the
/// truncated product is nonnegative, so no cancellation occurs.
inline double surjective_power_sum(std::span<const double> values, std::size_t m) {
  if (values.size() > m) return 0.0;
  std::vector<double> acc(m + 1, 0.0);
  acc[0] = 1.0;
  for (double v : values) multiply_exponential_factor(acc, v, 1);
  return factorial(m) * acc[m];
}

/// Same quantity by inclusion–exclusion: Σ_{∅≠T} (−1)^{s−|T|} (Σ_{i∈T} v_i)^m.
inline double surjective_power_sum_inclusion_exclusion(std::span<const double> values, std::size_t m) {
  const std::size_t s = values.size();
  if (s > 30) throw Error(ErrorCode::InstanceTooLarge, "inclusion–exclusion limited to 30 vertices per edge");
  long double total = 0.0L;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
    double subset_sum = 0.0;
    for (std::size_t i = 0; i < s; ++i)
      if (mask >> i & 1u) subset_sum += values[i];
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    const long double term = ipow(subset_sum, m);
    total += ((s - size) % 2 == 0) ? term : -term;
  }
  return static_cast<double>(total);
}

inline std::vector<double> gather(const Edge& e, std::span<const double> x) {
  std::vector<double> out;
  out.reserve(e.size());
  for (auto v : e) out.push_back(x[v]);
  return out;
}

inline void check_edge(const Edge& e, std::span<const double> x, std::size_t m) {
  if (e.size() > m)
    throw Error(ErrorCode::EdgeLargerThanOrder, "edge of size " + std::to_string(e.size()) +
                                                    " exceeds order " + std::to_string(m));
  for (auto v : e)
    if (v >= x.size()) throw Error(ErrorCode::DimensionMismatch, "edge vertex beyond evaluation point");
}

}  // namespace detail

/// x^e_m: Σ over m-tuples drawn from e using every vertex at least once of
/// the product of the corresponding coordinates. `e` is 0-based.
inline double edge_power_sum(const Edge& e, const EvalPoint& x, std::size_t m) {
  detail::check_edge(e, x.values(), m);
  return detail::surjective_power_sum(detail::gather(e, x.values()), m);
}

/// x^e_m evaluated by inclusion–exclusion over the 2^|e| − 1 nonempty subsets.
inline double edge_power_sum_inclusion_exclusion(const Edge& e, const EvalPoint& x, std::size_t m) {
  detail::check_edge(e, x.values(), m);
  return detail::surjective_power_sum_inclusion_exclusion(detail::gather(e, x.values()), m);
}

/// 𝓛(e)x^m = Σ_{i∈e} x_i^m − (s/Ω)·x^e_m. Nonnegative; zero iff x is constant on e.
inline double edge_laplacian_form(const Edge& e, const EvalPoint& x, std::size_t m) {
  detail::check_edge(e, x.values(), m);
  const auto form = EdgeForm::make(e.size(), m);
  const auto values = detail::gather(e, x.values());
  double diagonal = 0.0;
  for (double v : values) diagonal += detail::ipow(v, m);
  // rounding can push the exact-zero case slightly negative
  return std::max(0.0, diagonal - form.weight * detail::surjective_power_sum(values, m));
}

/// Precomputed Laplacian form 𝓛x^m of a hypergraph, with m the largest edge
/// size. The span-taking members skip input validation; they back the solver.
class LaplacianForm {
 public:
  explicit LaplacianForm(const Hypergraph& h) : n_(h.num_vertices()), m_(h.max_edge_size()) {
    edges_.assign(h.edges().begin(), h.edges().end());
    weights_.reserve(edges_.size());
    for (const auto& e : edges_) weights_.push_back(EdgeForm::make(e.size(), m_).weight);
  }

  std::size_t dimension() const noexcept { return n_; }
  std::size_t order() const noexcept { return m_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  double edge_value(std::size_t index, std::span<const double> x) const {
    const auto& e = edges_[index];
    std::vector<double> values = detail::gather(e, x);
    double diagonal = 0.0;
    for (double v : values) diagonal += detail::ipow(v, m_);
    return std::max(0.0, diagonal - weights_[index] * detail::surjective_power_sum(values, m_));
  }

  /// Per-edge terms are summed in edge order.
  double value(std::span<const double> x) const {
    double total = 0.0;
    for (std::size_t i = 0; i < edges_.size(); ++i) total += edge_value(i, x);
    return total;
  }

  void gradient(std::span<const double> x, std::span<double> out) const {
    std::fill(out.begin(), out.end(), 0.0);
    if (m_ == 0) return;
    const double m_fact = detail::factorial(m_);
    const double m_real = static_cast<double>(m_);
    for (std::size_t index = 0; index < edges_.size(); ++index) {
      const auto& e = edges_[index];
      const std::size_t s = e.size();
      // prefix[i] = Π_{j<i} f_j and suffix[i] = Π_{j≥i} f_j, f_j = e^{x_j t} − 1, truncated at t^{m−1}
      std::vector<std::vector<double>> prefix(s + 1, std::vector<double>(m_, 0.0));
      std::vector<std::vector<double>> suffix(s + 1, std::vector<double>(m_, 0.0));
      prefix[0][0] = 1.0;
      suffix[s][0] = 1.0;
      for (std::size_t i = 0; i < s; ++i) {
        prefix[i + 1] = prefix[i];
        detail::multiply_exponential_factor(prefix[i + 1], x[e[i]], 1);
      }
      for (std::size_t i = s; i-- > 0;) {
        suffix[i] = suffix[i + 1];
        detail::multiply_exponential_factor(suffix[i], x[e[i]], 1);
      }
      for (std::size_t i = 0; i < s; ++i) {
        // ∂x^e_m/∂x_i = m!·[t^{m−1}] e^{x_i t} Π_{j≠i} f_j
        std::vector<double> others(m_, 0.0);
        for (std::size_t a = 0; a < m_; ++a) {
          if (prefix[i][a] == 0.0) continue;
          for (std::size_t b = 0; a + b < m_; ++b) others[a + b] += prefix[i][a] * suffix[i + 1][b];
        }
        detail::multiply_exponential_factor(others, x[e[i]], 0);
        const double d_power_sum = m_fact * others[m_ - 1];
        out[e[i]] += m_real * detail::ipow(x[e[i]], m_ - 1) - weights_[index] * d_power_sum;
      }
    }
  }

  double value(const EvalPoint& x) const {
    check_dimension(x);
    return value(x.values());
  }

  std::vector<double> gradient(const EvalPoint& x) const {
    check_dimension(x);
    std::vector<double> g(n_, 0.0);
    gradient(x.values(), g);
    return g;
  }

 private:
  void check_dimension(const EvalPoint& x) const {
    if (x.size() != n_)
      throw Error(ErrorCode::DimensionMismatch,
                  "point has " + std::to_string(x.size()) + " coordinates, hypergraph has " + std::to_string(n_) +
                      " vertices");
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
};

/// 𝓛x^m = Σ_e 𝓛(e)x^m with m the largest edge size.
inline double laplacian_form(const Hypergraph& h, const EvalPoint& x) { return LaplacianForm(h).value(x); }

inline std::vector<double> laplacian_gradient(const Hypergraph& h, const EvalPoint& x) {
  return LaplacianForm(h).gradient(x);
}

/// Independent check of laplacian_form: sums l_{i1…im} x_{i1}…x_{im} over all
/// n^m index tuples of 𝓓 − 𝓐 directly. Guarded to n^m ≤ 10^7.
inline double dense_contraction_oracle(const Hypergraph& h, const EvalPoint& x) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.max_edge_size();
  if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "point length differs from vertex count");
  if (m == 0) return 0.0;
  constexpr std::uint64_t kLimit = 10'000'000;
  std::uint64_t tuples = 1;
  for (std::size_t k = 0; k < m; ++k) {
    tuples *= n;
    if (tuples > kLimit || n > 64)
      throw Error(ErrorCode::InstanceTooLarge, "dense contraction needs n^m <= 1e7");
  }

  std::unordered_map<std::uint64_t, double> entry;  // edge vertex mask -> s/Ω
  for (const auto& e : h.edges()) {
    std::uint64_t mask = 0;
    for (auto v : e) mask |= std::uint64_t{1} << v;
    entry[mask] = EdgeForm::make(e.size(), m).weight;
  }
  const auto& degree = h.degrees();

  std::vector<std::size_t> index(m, 0);
  long double total = 0.0L;
  for (std::uint64_t t = 0; t < tuples; ++t) {
    std::uint64_t mask = 0;
    double product = 1.0;
    for (auto i : index) {
      mask |= std::uint64_t{1} << i;
      product *= x[i];
    }
    double coefficient = 0.0;
    if (__builtin_popcountll(mask) == 1) coefficient = static_cast<double>(degree[index[0]]);
    if (auto it = entry.find(mask); it != entry.end()) coefficient -= it->second;
    total += static_cast<long double>(coefficient) * product;

    for (std::size_t pos = 0; pos < m; ++pos) {
      if (++index[pos] < n) break;
      index[pos] = 0;
    }
  }
  return static_cast<double>(total);
}

}  // namespace hyperalpha

#endif  // HYPERALPHA_TENSOR_FORMS_HPP
