#pragma once

// Monte Carlo harness with a fixed shard layout. Draws are split over
// kMonteCarloShards shards no matter how many threads run them, each shard
// gets its own generator derived from the user seed, and shard results are
// folded in shard order. The parallel and serial paths therefore produce
// identical output, which the determinism tests assert bit for bit.

#include <vector>

#include "mapcomb/rng.hpp"

namespace mapcomb {

inline constexpr int kMonteCarloShards = 64;

// Reads MAPCOMB_THREADS and caps the OpenMP thread count if it is set to a
// positive integer. Call once at program start.
void apply_thread_env();

// OpenMP threads that would currently be used.
int max_threads();

// Runs `worker(rng, draws, acc)` once per shard and returns the per-shard
// accumulators in shard order. Shard s draws indices [total*s/shards,
// total*(s+1)/shards) so the counts always sum to `total`.
template <typename Acc, typename Worker>
std::vector<Acc> run_sharded(std::uint64_t seed, long long total, Worker&& worker,
                             bool parallel, int shards = kMonteCarloShards) {
  std::vector<Acc> out(static_cast<size_t>(shards));
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int s = 0; s < shards; ++s) {
    Rng rng(shard_seed(seed, static_cast<std::uint64_t>(s)));
    const long long lo = total * s / shards;
    const long long hi = total * (s + 1) / shards;
    Acc acc{};
    worker(rng, hi - lo, acc);
    out[static_cast<size_t>(s)] = std::move(acc);
  }
  return out;
}

// Shard-order folds for the two accumulator shapes the callers use.
std::vector<long long> fold_histograms(const std::vector<std::vector<long long>>& shards);
std::vector<double> fold_samples(const std::vector<std::vector<double>>& shards);

}  // namespace mapcomb
