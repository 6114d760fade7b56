#ifndef HYPERALPHA_GENERATE_HPP
#define HYPERALPHA_GENERATE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <variant>
#include <vector>

#include "hyperalpha/hypergraph.hpp"

namespace hyperalpha {

/// SplitMix64 finalizer; used to derive independent seeds from (seed, index).
constexpr std::uint64_t mix_seed(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed for the index-th member of a family rooted at `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return mix_seed(seed + index); }

/// Binomial coefficient, saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

namespace model {

struct UniformRandom {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t edge_count = 0;
};

/// size_weights[s] is the relative frequency of edges of size s (entries for
/// s < 2 must be zero).
struct NonuniformRandom {
  std::size_t n = 0;
  std::vector<double> size_weights;
  std::size_t edge_count = 0;
};

struct CompleteUniform {
  std::size_t n = 0;
  std::size_t k = 0;
};

/// Consecutive k-edges where neighbours share `overlap` vertices.
struct Hyperpath {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t overlap = 0;
};

}  // namespace model

using Model = std::variant<model::UniformRandom, model::NonuniformRandom, model::CompleteUniform, model::Hyperpath>;

namespace detail {

inline Edge random_subset(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<Vertex> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  Edge e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(e.begin(), e.end());
  return e;
}

inline std::vector<Edge> all_subsets(std::size_t n, std::size_t k) {
  std::vector<Edge> out;
  Edge current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

inline void check_size(std::size_t n, std::size_t k) {
  if (n < 1) throw Error(ErrorCode::InfeasibleModel, "n must be positive");
  if (k < 2 || k > n)
    throw Error(ErrorCode::InfeasibleModel,
                "edge size " + std::to_string(k) + " must lie in [2, " + std::to_string(n) + "]");
}

inline Hypergraph generate_impl(const model::UniformRandom& p, std::mt19937_64& rng) {
  check_size(p.n, p.k);
  const auto available = binomial(p.n, p.k);
  if (p.edge_count > available)
    throw Error(ErrorCode::InfeasibleModel, std::to_string(p.edge_count) + " edges requested but only " +
                                                std::to_string(available) + " distinct " + std::to_string(p.k) +
                                                "-subsets exist");
  std::vector<Edge> edges;
  if (available <= 4 * p.edge_count && available <= (1u << 20)) {
    // dense request: draw without replacement from the full list
    auto all = all_subsets(p.n, p.k);
    for (std::size_t i = 0; i < p.edge_count; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
      std::swap(all[i], all[pick(rng)]);
    }
    edges.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(p.edge_count));
  } else {
    std::set<Edge> seen;
    while (edges.size() < p.edge_count) {
      auto e = random_subset(p.n, p.k, rng);
      if (seen.insert(e).second) edges.push_back(std::move(e));
    }
  }
  return Hypergraph::from_zero_based(p.n, std::move(edges));
}

inline Hypergraph generate_impl(const model::NonuniformRandom& p, std::mt19937_64& rng) {
  if (p.n < 1) throw Error(ErrorCode::InfeasibleModel, "n must be positive");
  std::uint64_t available = 0;
  bool any = false;
  for (std::size_t s = 0; s < p.size_weights.size(); ++s) {
    const double w = p.size_weights[s];
    if (w < 0.0) throw Error(ErrorCode::InfeasibleModel, "negative size weight");
    if (w == 0.0) continue;
    check_size(p.n, s);
    any = true;
    available = std::min<std::uint64_t>(UINT64_MAX / 2, available + binomial(p.n, s));
  }
  if (!any) throw Error(ErrorCode::InfeasibleModel, "no edge size has positive weight");
  if (p.edge_count > available)
    throw Error(ErrorCode::InfeasibleModel, std::to_string(p.edge_count) + " edges requested but only " +
                                                std::to_string(available) + " distinct edges exist");

  std::discrete_distribution<std::size_t> pick_size(p.size_weights.begin(), p.size_weights.end());
  std::set<Edge> seen;
  std::vector<Edge> edges;
  const std::size_t max_attempts = 1000 * (p.edge_count + 1) + 100000;
  for (std::size_t attempt = 0; edges.size() < p.edge_count; ++attempt) {
    if (attempt >= max_attempts)
      throw Error(ErrorCode::InfeasibleModel, "rejection sampling did not find enough distinct edges");
    auto e = random_subset(p.n, pick_size(rng), rng);
    if (seen.insert(e).second) edges.push_back(std::move(e));
  }
  return Hypergraph::from_zero_based(p.n, std::move(edges));
}

inline Hypergraph generate_impl(const model::CompleteUniform& p, std::mt19937_64&) {
  check_size(p.n, p.k);
  if (binomial(p.n, p.k) > 5'000'000) throw Error(ErrorCode::InstanceTooLarge, "too many edges to materialize");
  return Hypergraph::from_zero_based(p.n, all_subsets(p.n, p.k));
}

inline Hypergraph generate_impl(const model::Hyperpath& p, std::mt19937_64&) {
  check_size(p.n, p.k);
  if (p.overlap >= p.k) throw Error(ErrorCode::InfeasibleModel, "overlap must be smaller than the edge size");
  const std::size_t stride = p.k - p.overlap;
  if ((p.n - p.k) % stride != 0)
    throw Error(ErrorCode::InfeasibleModel, "n - k must be a multiple of k - overlap for the path to end on vertex n");
  std::vector<Edge> edges;
  for (std::size_t start = 0; start + p.k <= p.n; start += stride) {
    Edge e(p.k);
    for (std::size_t i = 0; i < p.k; ++i) e[i] = start + i;
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_zero_based(p.n, std::move(edges));
}

}  // namespace detail

/// Deterministic for a fixed seed; the structured models ignore the seed.
inline Hypergraph generate(const Model& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return std::visit([&](const auto& params) { return detail::generate_impl(params, rng); }, m);
}

}  // namespace hyperalpha

#endif  // HYPERALPHA_GENERATE_HPP
