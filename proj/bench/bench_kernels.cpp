// Timing comparison of the OpenMP kernels against their serial reference
// paths. Not a test: it prints wall times and speedups and always exits 0.
// Run with MAPCOMB_THREADS=k to pin the parallel side to k threads.

#include <chrono>
#include <cstdio>
#include <vector>

#include "mapcomb/degree_models.hpp"
#include "mapcomb/exact_stats.hpp"
#include "mapcomb/numeric.hpp"
#include "mapcomb/oracle.hpp"
#include "mapcomb/parallel.hpp"
#include "mapcomb/pmf.hpp"
#include "mapcomb/rng.hpp"
#include "mapcomb/series.hpp"

using namespace mapcomb;

namespace {

template <typename Fn>
double time_of(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* label, double serial, double parallel) {
  std::printf("%-34s serial %8.3f s   parallel %8.3f s   speedup %.2fx\n", label, serial,
              parallel, parallel > 0.0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
  apply_thread_env();
  std::printf("threads: %d, shards: %d\n\n", max_threads(), kMonteCarloShards);

  {
    Rng rng(1);
    std::vector<double> a(6000), b(6000);
    for (auto& v : a) v = rng.uniform();
    for (auto& v : b) v = rng.uniform();
    volatile double sink = 0.0;
    const double ts = time_of([&] {
      for (int r = 0; r < 40; ++r) sink += series_mul(a, b, a.size() + b.size(), false)[123];
    });
    const double tp = time_of([&] {
      for (int r = 0; r < 40; ++r) sink += series_mul(a, b, a.size() + b.size(), true)[123];
    });
    row("series product, deg 6000 x40", ts, tp);
  }

  {
    const DegreeModel model = DegreeModel::gen_neg_binomial(BigRational(1));
    volatile long long sink = 0;
    const double ts =
        time_of([&] { sink += oracle_law(model, 7, OracleStat::ComponentCount, false).values.size(); });
    const double tp =
        time_of([&] { sink += oracle_law(model, 7, OracleStat::ComponentCount, true).values.size(); });
    row("enumeration oracle, n = 7", ts, tp);
  }

  {
    const DegreeModel model = DegreeModel::binomial_m(2);
    const ComponentStructure structure(model, 20000);
    auto batch = [&](bool parallel) {
      auto shards = run_sharded<long long>(
          9, 20000,
          [&](Rng& rng, long long cnt, long long& acc) {
            for (long long i = 0; i < cnt; ++i)
              acc += static_cast<long long>(structure.sample_sizes(rng).size());
          },
          parallel);
      long long total = 0;
      for (long long v : shards) total += v;
      return total;
    };
    volatile long long sink = 0;
    const double ts = time_of([&] { sink += batch(false); });
    const double tp = time_of([&] { sink += batch(true); });
    row("component chains, n=2e4 x2e4", ts, tp);
  }

  {
    const DegreeModel model = DegreeModel::gen_neg_binomial(BigRational(2));
    const Pmf x = cyclic_pmf(model, 100000);
    const CdfSampler draw(x);
    auto batch = [&](bool parallel) {
      auto shards = run_sharded<long long>(
          11, 4000000,
          [&](Rng& rng, long long cnt, long long& acc) {
            for (long long i = 0; i < cnt; ++i) acc += draw(rng);
          },
          parallel);
      long long total = 0;
      for (long long v : shards) total += v;
      return total;
    };
    volatile long long sink = 0;
    const double ts = time_of([&] { sink += batch(false); });
    const double tp = time_of([&] { sink += batch(true); });
    row("cyclic-count draws, 4e6 @ n=1e5", ts, tp);
  }

  return 0;
}
