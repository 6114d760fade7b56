// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.
#ifndef HYPERALPHA_TESTS_ORACLES_HPP
#define HYPERALPHA_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "hyperalpha/hyperalpha.hpp"

namespace oracle {

using hyperalpha::Count;
using Signed = __int128;

/// Σ over all s^m tuples of edge positions that hit every position, of the
/// product of the selected values.
inline double brute_force_power_sum(const std::vector<double>& values, std::size_t m) {
  const std::size_t s = values.size();
  std::vector<std::size_t> tuple(m, 0);
  double total = 0.0;
  while (true) {
    std::vector<bool> hit(s, false);
    double product = 1.0;
    for (auto t : tuple) {
      hit[t] = true;
      product *= values[t];
    }
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) total += product;
    std::size_t pos = 0;
    while (pos < m && ++tuple[pos] == s) tuple[pos++] = 0;
    if (pos == m) break;
  }
  return total;
}

inline Count binomial(std::size_t n, std::size_t k) {
  Count r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Σ_{k_1+…+k_s = m, k_j ≥ 1} m!/(k_1!…k_s!), each multinomial built from binomials.
inline Count omega_composition_sum(std::size_t m, std::size_t s) {
  Count total = 0;
  std::function<void(std::size_t, std::size_t, Count)> rec = [&](std::size_t slot, std::size_t remaining,
                                                                  Count multinomial) {
    if (slot + 1 == s) {
      if (remaining >= 1) total += multinomial;  // last part takes the rest: C(remaining, remaining) = 1
      return;
    }
    // leave at least one for each later slot
    for (std::size_t k = 1; k + (s - slot - 1) <= remaining; ++k) rec(slot + 1, remaining - k, multinomial * binomial(remaining, k));
  };
  rec(0, m, 1);
  return total;
}

/// Σ_{j=0}^{s−1} (−1)^j C(s,j) (s−j)^m.
inline Count omega_inclusion_exclusion(std::size_t m, std::size_t s) {
  Signed total = 0;
  for (std::size_t j = 0; j < s; ++j) {
    Signed power = 1;
    for (std::size_t i = 0; i < m; ++i) power *= static_cast<Signed>(s - j);
    const Signed term = static_cast<Signed>(binomial(s, j)) * power;
    total += (j % 2 == 0) ? term : -term;
  }
  return static_cast<Count>(total);
}

/// s!·S(m, s) with Stirling numbers of the second kind from their recurrence.
inline Count omega_stirling(std::size_t m, std::size_t s) {
  std::vector<std::vector<Count>> stirling(m + 1, std::vector<Count>(s + 1, 0));
  stirling[0][0] = 1;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t k = 1; k <= std::min(i, s); ++k) stirling[i][k] = k * stirling[i - 1][k] + stirling[i - 1][k - 1];
  Count factorial = 1;
  for (std::size_t k = 2; k <= s; ++k) factorial *= k;
  return factorial * stirling[m][s];
}

inline std::vector<double> central_difference(const std::function<double(const std::vector<double>&)>& f,
                                              std::vector<double> x, double h) {
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double saved = x[i];
    x[i] = saved + h;
    const double up = f(x);
    x[i] = saved - h;
    const double down = f(x);
    x[i] = saved;
    g[i] = (up - down) / (2.0 * h);
  }
  return g;
}

/// Exhaustive isoperimetric number over explicit subsets, scanning sizes in
/// increasing order and subsets of a size lexicographically.
struct IsoAnswer {
  std::size_t num = 0, den = 1;
  std::vector<std::size_t> set;
};

inline IsoAnswer isoperimetric(const hyperalpha::Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  IsoAnswer best;
  bool found = false;
  for (std::size_t size = 1; size <= n / 2; ++size) {
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::set<std::size_t> s;
      for (std::size_t v = 0; v < n; ++v)
        if (choose[v]) s.insert(v);
      std::size_t cut = 0;
      for (const auto& e : h.edges()) {
        bool in = false, out = false;
        for (auto v : e) (s.count(v) ? in : out) = true;
        if (in && out) ++cut;
      }
      // strict improvement only: earlier (smaller, lexicographically first) sets win ties
      if (!found || cut * best.den < best.num * size) {
        found = true;
        best = {cut, size, std::vector<std::size_t>(s.begin(), s.end())};
      }
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }
  return best;
}

/// Floyd–Warshall on "shares an edge" adjacency; SIZE_MAX when disconnected.
inline std::size_t diameter(const hyperalpha::Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  constexpr std::size_t inf = SIZE_MAX / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : h.edges())
    for (auto u : e)
      for (auto v : e)
        if (u != v) d[u][v] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::size_t longest = 0;
  for (auto& row : d)
    for (auto v : row) longest = std::max(longest, v);
  return longest >= inf ? SIZE_MAX : longest;
}

/// Minimum Fiedler quotient by projected gradient descent on the Rayleigh
/// quotient restricted to vectors orthogonal to the all-ones vector.
inline double minimize_fiedler_quotient(const hyperalpha::Graph& g, std::mt19937_64& rng, int starts = 8) {
  const std::size_t n = g.num_vertices();
  std::normal_distribution<double> normal;
  double best = std::numeric_limits<double>::infinity();
  const auto rayleigh = [&](const std::vector<double>& x) {
    double num = 0.0, den = 0.0;
    for (const auto& [u, v] : g.edges()) num += (x[u] - x[v]) * (x[u] - x[v]);
    for (double xi : x) den += xi * xi;
    return num / den;
  };
  const auto project = [&](std::vector<double>& x) {
    double mean = 0.0;
    for (double xi : x) mean += xi;
    mean /= static_cast<double>(n);
    double norm = 0.0;
    for (double& xi : x) {
      xi -= mean;
      norm += xi * xi;
    }
    norm = std::sqrt(norm);
    for (double& xi : x) xi /= norm;
  };
  // step 1/(2Δ+1) keeps I − step·L a contraction on 1^⊥
  std::size_t max_degree = 1;
  for (auto d : g.degrees()) max_degree = std::max(max_degree, d);
  const double step = 1.0 / (2.0 * static_cast<double>(max_degree) + 1.0);
  for (int s = 0; s < starts; ++s) {
    std::vector<double> x(n);
    for (double& xi : x) xi = normal(rng);
    project(x);
    for (int it = 0; it < 20000; ++it) {
      std::vector<double> lx(n, 0.0);
      for (const auto& [u, v] : g.edges()) {
        lx[u] += x[u] - x[v];
        lx[v] += x[v] - x[u];
      }
      for (std::size_t i = 0; i < n; ++i) x[i] -= step * lx[i];
      project(x);
    }
    best = std::min(best, rayleigh(x));
  }
  return best;
}

inline hyperalpha::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<hyperalpha::Graph::Pair> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) pairs.emplace_back(u, v);
  return hyperalpha::Graph(n, std::move(pairs));
}

inline hyperalpha::Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  while (true) {
    auto g = random_graph(n, p, rng);
    if (hyperalpha::diameter(g)) return g;
  }
}

/// Random hypergraph on n vertices with edge sizes in [2, min(size_max, n)]
/// and at most edges_max edges, clamped to what n admits.
inline hyperalpha::Hypergraph random_hypergraph(std::size_t n, std::size_t size_max, std::size_t edges_max,
                                                std::mt19937_64& rng) {
  const std::size_t top = std::min(size_max, n);
  std::vector<double> weights(top + 1, 0.0);
  std::uint64_t available = 0;
  for (std::size_t s = 2; s <= top; ++s) {
    weights[s] = 1.0;
    available += static_cast<std::uint64_t>(binomial(n, s));
  }
  const std::size_t count = 1 + rng() % std::min<std::uint64_t>(edges_max, available);
  return hyperalpha::generate(hyperalpha::model::NonuniformRandom{n, weights, count}, rng());
}

inline std::vector<double> random_point(std::size_t n, double lo, double hi, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> x(n);
  for (double& v : x) v = u(rng);
  return x;
}

}  // namespace oracle

#endif  // HYPERALPHA_TESTS_ORACLES_HPP
