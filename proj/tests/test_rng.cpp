#include <set>

#include "doctest.h"
#include "mapcomb/rng.hpp"

using namespace mapcomb;

TEST_CASE("splitmix64 matches the published test vector") {
  // First output of the reference SplitMix64 stream seeded with 0.
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
}

TEST_CASE("same seed replays the same stream") {
  Rng a(12345), b(12345);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("shard seeds are pairwise distinct") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 256; ++s) seen.insert(shard_seed(7, s));
  CHECK(seen.size() == 256);
  CHECK(shard_seed(7, 0) != shard_seed(8, 0));
}

TEST_CASE("uniform stays in [0,1) and is centered") {
  Rng rng(99);
  double sum = 0.0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
  }
  CHECK(sum / draws == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("uniform_below respects the bound without modulo bias") {
  Rng rng(5);
  long long counts[7] = {};
  for (int i = 0; i < 70000; ++i) {
    const auto v = rng.uniform_below(7);
    CHECK(v < 7);
    ++counts[v];
  }
  for (long long c : counts) CHECK(std::abs(c - 10000) < 500);  // ~5 sigma
  CHECK(rng.uniform_below(1) == 0);
  CHECK_THROWS_AS(rng.uniform_below(0), std::domain_error);
}

TEST_CASE("bernoulli frequency tracks p") {
  Rng rng(17);
  int hits = 0;
  for (int i = 0; i < 100000; ++i) hits += rng.bernoulli(0.3) ? 1 : 0;
  CHECK(hits / 100000.0 == doctest::Approx(0.3).epsilon(0.02));
}
