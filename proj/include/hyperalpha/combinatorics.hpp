#ifndef HYPERALPHA_COMBINATORICS_HPP
#define HYPERALPHA_COMBINATORICS_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "hyperalpha/hypergraph.hpp"

namespace hyperalpha {

/// Simple undirected graph; pairs stored as (u, v) with u < v, sorted.
class Graph {
 public:
  using Pair = std::pair<Vertex, Vertex>;

  Graph(std::size_t n, std::vector<Pair> pairs) : n_(n) {
    for (auto& [u, v] : pairs) {
      if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(u + 1));
      if (u >= n || v >= n) throw Error(ErrorCode::EdgeOutOfRange, "graph edge outside vertex range");
      if (u > v) std::swap(u, v);
    }
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
      throw Error(ErrorCode::DuplicateEdge, "duplicate graph edge");
    pairs_ = std::move(pairs);
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return pairs_.size(); }
  std::span<const Pair> edges() const noexcept { return pairs_; }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(n_, 0);
    for (const auto& [u, v] : pairs_) {
      ++d[u];
      ++d[v];
    }
    return d;
  }

  Hypergraph to_hypergraph() const {
    std::vector<Edge> edges;
    edges.reserve(pairs_.size());
    for (const auto& [u, v] : pairs_) edges.push_back({u, v});
    return Hypergraph::from_zero_based(n_, std::move(edges));
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::vector<Pair> pairs_;
};

/// Nonnegative fraction in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den) {
    const auto g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
  }

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) noexcept { return a.num == b.num && a.den == b.den; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    return static_cast<unsigned __int128>(a.num) * b.den <=> static_cast<unsigned __int128>(b.num) * a.den;
  }
};

struct CutResult {
  Rational value;
  std::vector<Vertex> witness_set;  // 0-based, sorted
  std::size_t boundary_size = 0;
};

/// Edges meeting both S and its complement, by index into h.edges().
inline std::vector<std::size_t> boundary(const Hypergraph& h, std::span<const Vertex> subset) {
  std::vector<bool> inside(h.num_vertices(), false);
  for (auto v : subset) {
    if (v >= h.num_vertices()) throw Error(ErrorCode::EdgeOutOfRange, "subset vertex outside hypergraph");
    inside[v] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edge(i);
    const auto hits = std::count_if(e.begin(), e.end(), [&](Vertex v) { return inside[v]; });
    if (hits > 0 && static_cast<std::size_t>(hits) < e.size()) out.push_back(i);
  }
  return out;
}

inline constexpr std::size_t kMaxIsoperimetricVertices = 24;

/// Exact i(H) = min |∂S|/|S| over 1 ≤ |S| ≤ ⌊n/2⌋ by exhaustive bitmask sweep.
/// Ties go to the smaller |S|, then the lexicographically smaller S.
inline CutResult isoperimetric_number(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  if (h.num_edges() == 0) throw Error(ErrorCode::NoEdges, "isoperimetric number needs at least one edge");
  if (n > kMaxIsoperimetricVertices) throw Error(ErrorCode::InstanceTooLarge, "isoperimetric sweep limited to n <= 24");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "isoperimetric number needs at least two vertices");

  std::vector<std::uint32_t> masks;
  for (const auto& e : h.edges()) {
    std::uint32_t mask = 0;
    for (auto v : e) mask |= std::uint32_t{1} << v;
    masks.push_back(mask);
  }

  const auto members = [](std::uint32_t mask) {
    std::vector<Vertex> out;
    for (Vertex v = 0; mask; ++v, mask >>= 1)
      if (mask & 1u) out.push_back(v);
    return out;
  };

  const std::size_t half = n / 2;
  bool found = false;
  Rational best;
  std::uint32_t best_mask = 0;
  std::size_t best_boundary = 0;
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << n); ++subset) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(subset));
    if (size > half) continue;
    std::size_t cut = 0;
    for (auto mask : masks)
      if ((mask & subset) != 0 && (mask & ~subset) != 0) ++cut;
    const auto candidate = Rational::make(cut, size);
    bool better = !found || candidate < best;
    if (found && candidate == best) {
      const auto best_size = static_cast<std::size_t>(__builtin_popcount(best_mask));
      better = size < best_size || (size == best_size && members(subset) < members(best_mask));
    }
    if (better) {
      found = true;
      best = candidate;
      best_mask = subset;
      best_boundary = cut;
    }
  }
  return {best, members(best_mask), best_boundary};
}

/// Joins u and v whenever some edge contains both.
inline Graph clique_expansion(const Hypergraph& h) {
  std::vector<Graph::Pair> pairs;
  for (const auto& e : h.edges())
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) pairs.emplace_back(e[a], e[b]);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return Graph(h.num_vertices(), std::move(pairs));
}

/// Diameter; std::nullopt means infinite (disconnected).
using Diameter = std::optional<std::size_t>;

/// Hop distances from `source`; unreachable vertices get SIZE_MAX.
inline std::vector<std::size_t> bfs_distances(const std::vector<std::vector<Vertex>>& adjacency, Vertex source) {
  std::vector<std::size_t> dist(adjacency.size(), SIZE_MAX);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const auto u = frontier.front();
    frontier.pop();
    for (auto v : adjacency[u])
      if (dist[v] == SIZE_MAX) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
  }
  return dist;
}

inline Diameter diameter(const Graph& g) {
  std::vector<std::vector<Vertex>> adjacency(g.num_vertices());
  for (const auto& [u, v] : g.edges()) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  std::size_t longest = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    for (auto d : bfs_distances(adjacency, s)) {
      if (d == SIZE_MAX) return std::nullopt;
      longest = std::max(longest, d);
    }
  }
  return longest;
}

/// Distance in the clique expansion: one hop per shared edge.
inline Diameter diameter(const Hypergraph& h) { return diameter(clique_expansion(h)); }

/// Dense symmetric matrix stored row-major.
struct SymmetricMatrix {
  std::size_t n = 0;
  std::vector<double> a;

  explicit SymmetricMatrix(std::size_t size) : n(size), a(size * size, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

struct EigenDecomposition {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] belongs to values[k]
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops to
/// 1e-10·‖A‖_F (or below 1e-300 for the zero matrix).
inline EigenDecomposition jacobi_eigen(SymmetricMatrix a) {
  const std::size_t n = a.n;
  SymmetricMatrix v(n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  double total = 0.0;
  for (double x : a.a) total += x * x;
  const double threshold = std::max(1e-10 * std::sqrt(total), 1e-300);

  const auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i) < a(j, j); });
  EigenDecomposition out;
  for (auto k : order) {
    out.values.push_back(a(k, k));
    std::vector<double> column(n);
    for (std::size_t i = 0; i < n; ++i) column[i] = v(i, k);
    out.vectors.push_back(std::move(column));
  }
  return out;
}

inline SymmetricMatrix laplacian_matrix(const Graph& g) {
  SymmetricMatrix l(g.num_vertices());
  for (const auto& [u, v] : g.edges()) {
    l(u, u) += 1.0;
    l(v, v) += 1.0;
    l(u, v) -= 1.0;
    l(v, u) -= 1.0;
  }
  return l;
}

inline constexpr std::size_t kMaxDenseEigenVertices = 2000;

/// Second-smallest eigenvalue of D − A (algebraic connectivity).
inline double lambda2(const Graph& g) {
  if (g.num_vertices() < 2) throw Error(ErrorCode::InvalidArgument, "lambda2 needs at least two vertices");
  if (g.num_vertices() > kMaxDenseEigenVertices)
    throw Error(ErrorCode::InstanceTooLarge, "dense eigensolver limited to n <= 2000");
  return std::max(0.0, jacobi_eigen(laplacian_matrix(g)).values[1]);
}

/// 2n·Σ_{edges}(x_i − x_j)² / Σ_i Σ_j (x_i − x_j)²; never below λ₂.
inline double fiedler_quotient(const Graph& g, std::span<const double> x) {
  const std::size_t n = g.num_vertices();
  if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "vector length differs from vertex count");
  double numerator = 0.0;
  for (const auto& [u, v] : g.edges()) numerator += (x[u] - x[v]) * (x[u] - x[v]);
  double denominator = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) denominator += (x[i] - x[j]) * (x[i] - x[j]);
  if (!(denominator > 0.0)) throw Error(ErrorCode::ConstantVector, "quotient undefined for constant vectors");
  return 2.0 * static_cast<double>(n) * numerator / denominator;
}

}  // namespace hyperalpha

#endif  // HYPERALPHA_COMBINATORICS_HPP
