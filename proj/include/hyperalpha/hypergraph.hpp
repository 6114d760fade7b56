#ifndef HYPERALPHA_HYPERGRAPH_HPP
#define HYPERALPHA_HYPERGRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hyperalpha/error.hpp"

namespace hyperalpha {

using Vertex = std::size_t;
/// Strictly increasing, 0-based vertex indices.
using Edge = std::vector<Vertex>;

struct BuildOptions {
  /// Size-1 edges contribute nothing to the Laplacian form but do count
  /// towards degrees, so they are rejected unless asked for.
  bool allow_singletons = false;
};

/// Undirected, unweighted hypergraph on vertices 0..n-1. Immutable once built.
///
/// Edges are stored sorted internally and the edge list itself is kept in
/// lexicographic order, so two hypergraphs compare equal iff they have the
/// same vertex count and the same edge set.
class Hypergraph {
 public:
  /// External constructor: vertex indices are 1-based.
  static Hypergraph from_one_based(std::size_t n, const std::vector<std::vector<std::size_t>>& edges,
                                   BuildOptions options = {}) {
    std::vector<Edge> shifted;
    shifted.reserve(edges.size());
    for (const auto& e : edges) {
      Edge z;
      z.reserve(e.size());
      for (auto v : e) {
        if (v < 1 || v > n)
          throw Error(ErrorCode::EdgeOutOfRange,
                      "vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
        z.push_back(v - 1);
      }
      shifted.push_back(std::move(z));
    }
    return from_zero_based(n, std::move(shifted), options);
  }

  static Hypergraph from_zero_based(std::size_t n, std::vector<Edge> edges, BuildOptions options = {}) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "vertex count must be at least 1");
    for (auto& e : edges) {
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw Error(ErrorCode::DuplicateVertexInEdge, "edge " + describe(e) + " repeats a vertex");
      if (!e.empty() && e.back() >= n)
        throw Error(ErrorCode::EdgeOutOfRange,
                    "vertex " + std::to_string(e.back() + 1) + " outside [1, " + std::to_string(n) + "]");
      const std::size_t min_size = options.allow_singletons ? 1 : 2;
      if (e.size() < min_size)
        throw Error(ErrorCode::EdgeTooSmall,
                    "edge " + describe(e) + " has " + std::to_string(e.size()) + " vertices");
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
      throw Error(ErrorCode::DuplicateEdge, "edge " + describe(*dup) + " appears twice");
    return Hypergraph(n, std::move(edges));
  }

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  /// Largest edge size m (the tensor order); 0 without edges.
  std::size_t max_edge_size() const noexcept { return max_size_; }
  /// Smallest edge size s_min; 0 without edges.
  std::size_t min_edge_size() const noexcept { return min_size_; }
  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }

  bool is_uniform() const noexcept { return !edges_.empty() && min_size_ == max_size_; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

  /// Renders an edge with 1-based indices, e.g. "{1,2,3}".
  static std::string describe(const Edge& e) {
    std::string out = "{";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(e[i] + 1);
    }
    return out + "}";
  }

 private:
  Hypergraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), degrees_(n, 0) {
    if (!edges_.empty()) {
      min_size_ = edges_.front().size();
      for (const auto& e : edges_) {
        max_size_ = std::max(max_size_, e.size());
        min_size_ = std::min(min_size_, e.size());
        for (auto v : e) ++degrees_[v];
      }
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
  std::size_t max_size_ = 0;
  std::size_t min_size_ = 0;
};

/// Convenience wrapper over Hypergraph::from_one_based.
inline Hypergraph build(std::size_t n, const std::vector<std::vector<std::size_t>>& edges,
                        BuildOptions options = {}) {
  return Hypergraph::from_one_based(n, edges, options);
}

struct DegreeProfile {
  std::vector<std::size_t> degrees;
  std::size_t max_degree = 0;
  std::size_t s_min = 0;
  std::size_t m = 0;
};

inline DegreeProfile degree_profile(const Hypergraph& h) {
  DegreeProfile p;
  p.degrees = h.degrees();
  p.max_degree = p.degrees.empty() ? 0 : *std::max_element(p.degrees.begin(), p.degrees.end());
  p.s_min = h.min_edge_size();
  p.m = h.max_edge_size();
  return p;
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Connected components, each sorted, ordered by their smallest vertex.
/// Isolated vertices form their own components.
inline std::vector<std::vector<Vertex>> connected_components(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  detail::DisjointSets sets(n);
  for (const auto& e : h.edges())
    for (std::size_t i = 1; i < e.size(); ++i) sets.unite(e[0], e[i]);

  std::vector<std::vector<Vertex>> components;
  std::vector<std::size_t> slot(n, n);
  for (Vertex v = 0; v < n; ++v) {
    const auto root = sets.find(v);
    if (slot[root] == n) {
      slot[root] = components.size();
      components.emplace_back();
    }
    components[slot[root]].push_back(v);
  }
  return components;
}

inline bool is_connected(const Hypergraph& h) { return connected_components(h).size() == 1; }

/// True when some edge is a proper subset of another edge.
inline bool has_nested_edges(const Hypergraph& h) {
  const auto edges = h.edges();
  for (const auto& a : edges)
    for (const auto& b : edges)
      if (a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) return true;
  return false;
}

/// True when some edge contains every vertex.
inline bool has_spanning_edge(const Hypergraph& h) {
  return std::any_of(h.edges().begin(), h.edges().end(),
                     [&](const Edge& e) { return e.size() == h.num_vertices(); });
}

/// Applies a vertex permutation: vertex v becomes perm[v].
inline Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> perm) {
  if (perm.size() != h.num_vertices())
    throw Error(ErrorCode::DimensionMismatch, "permutation length differs from vertex count");
  std::vector<Edge> edges;
  edges.reserve(h.num_edges());
  for (const auto& e : h.edges()) {
    Edge mapped;
    for (auto v : e) mapped.push_back(perm[v]);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph::from_zero_based(h.num_vertices(), std::move(edges), {.allow_singletons = true});
}

}  // namespace hyperalpha

#endif  // HYPERALPHA_HYPERGRAPH_HPP
