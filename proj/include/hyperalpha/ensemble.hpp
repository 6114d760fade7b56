#ifndef HYPERALPHA_ENSEMBLE_HPP
#define HYPERALPHA_ENSEMBLE_HPP

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "hyperalpha/bounds.hpp"
#include "hyperalpha/generate.hpp"

namespace hyperalpha {

/// Random instance family for batch verification. Instance i is generated
/// from derive_seed(seed, i) alone, so ensembles are reproducible under any
/// thread count.
struct EnsembleSpec {
  std::size_t count = 100;
  std::size_t n_min = 4;
  std::size_t n_max = 6;
  std::size_t size_min = 2;
  /// Edge sizes are also capped at n − 1: an edge covering every vertex
  /// admits no feasible point vanishing outside it.
  std::size_t size_max = 4;
  std::size_t edges_min = 2;
  std::size_t edges_max = 6;
  bool connected_only = false;
  /// Resample until the largest edge has at least this many vertices.
  std::size_t min_order = 0;
  std::uint64_t seed = 0;

  void validate() const {
    if (n_min < 2 || n_min > n_max) throw Error(ErrorCode::InvalidArgument, "need 2 <= n-min <= n-max");
    if (size_min < 2 || size_min > size_max) throw Error(ErrorCode::InvalidArgument, "need 2 <= size-min <= size-max");
    if (size_min + 1 > n_max) throw Error(ErrorCode::InfeasibleModel, "size-min must be below n-max");
    if (edges_min < 1 || edges_min > edges_max) throw Error(ErrorCode::InvalidArgument, "need 1 <= edges-min <= edges-max");
    if (min_order > size_max) throw Error(ErrorCode::InfeasibleModel, "min-order exceeds size-max");
  }
};

inline Hypergraph ensemble_instance(const EnsembleSpec& spec, std::size_t index) {
  std::mt19937_64 rng(derive_seed(spec.seed, index));
  const std::size_t n_low = std::max(spec.n_min, spec.size_min + 1);
  constexpr int kAttempts = 10'000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(n_low, spec.n_max)(rng);
    const std::size_t largest = std::min(spec.size_max, n - 1);
    if (largest < spec.min_order) continue;
    std::vector<double> weights(largest + 1, 0.0);
    for (std::size_t s = spec.size_min; s <= largest; ++s) weights[s] = 1.0;
    std::uint64_t available = 0;
    for (std::size_t s = spec.size_min; s <= largest; ++s) available += binomial(n, s);
    const std::size_t edges_high = std::min<std::uint64_t>(spec.edges_max, available);
    if (edges_high < spec.edges_min) continue;
    const std::size_t edge_count = std::uniform_int_distribution<std::size_t>(spec.edges_min, edges_high)(rng);

    auto h = generate(model::NonuniformRandom{n, weights, edge_count}, rng());
    if (spec.connected_only && !is_connected(h)) continue;
    if (h.max_edge_size() < spec.min_order) continue;
    return h;
  }
  throw Error(ErrorCode::InfeasibleModel, "no instance satisfying the ensemble constraints was found");
}

struct EnsembleEntry {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::optional<BoundsReport> report;
  std::string error;  // set when the instance was skipped
};

struct EnsembleSummary {
  std::size_t instances = 0;
  std::size_t skipped = 0;
  std::size_t checks_held = 0;
  std::size_t violations = 0;
  std::size_t not_applicable = 0;
  std::optional<double> worst_slack;
  std::string worst_check;
  std::size_t worst_index = 0;
};

/// Worker count: explicit request, else HYPERALPHA_THREADS, else hardware concurrency.
inline std::size_t resolve_threads(std::optional<std::size_t> requested) {
  if (requested && *requested > 0) return *requested;
  if (const char* env = std::getenv("HYPERALPHA_THREADS")) {
    try {
      const auto v = std::stoul(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Verifies every ensemble member on a worker pool and hands entries to
/// `sink` strictly in index order as soon as each prefix is complete.
inline EnsembleSummary run_ensemble(const EnsembleSpec& spec, const VerifyConfig& config, std::size_t threads,
                                    const std::function<void(const EnsembleEntry&)>& sink) {
  spec.validate();
  std::vector<std::optional<EnsembleEntry>> slots(spec.count);
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  const auto work = [&] {
    for (std::size_t i = next++; i < spec.count; i = next++) {
      EnsembleEntry entry;
      entry.index = i;
      entry.seed = derive_seed(spec.seed, i);
      try {
        auto h = ensemble_instance(spec, i);
        VerifyConfig local = config;
        local.solver.seed = entry.seed;
        entry.report = verify(h, local);
      } catch (const Error& e) {
        entry.error = e.what();
      }
      {
        std::lock_guard lock(mutex);
        slots[i] = std::move(entry);
      }
      ready.notify_all();
    }
  };

  std::vector<std::thread> pool;
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, spec.count));
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);

  EnsembleSummary summary;
  for (std::size_t i = 0; i < spec.count; ++i) {
    EnsembleEntry entry;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      entry = std::move(*slots[i]);
      slots[i].reset();
    }
    ++summary.instances;
    if (!entry.report) {
      ++summary.skipped;
    } else {
      for (const auto& c : entry.report->checks) {
        if (c.status == CheckStatus::NotApplicable) {
          ++summary.not_applicable;
          continue;
        }
        c.status == CheckStatus::Holds ? ++summary.checks_held : ++summary.violations;
        if (!summary.worst_slack || c.slack < *summary.worst_slack) {
          summary.worst_slack = c.slack;
          summary.worst_check = c.name;
          summary.worst_index = i;
        }
      }
    }
    sink(entry);
  }
  for (auto& t : pool) t.join();
  return summary;
}

}  // namespace hyperalpha

#endif  // HYPERALPHA_ENSEMBLE_HPP
