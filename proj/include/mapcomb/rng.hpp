#pragma once

// Seeded RNG with documented semantics. We deliberately avoid the standard
// <random> distributions: their output is implementation-defined, and the
// reproducibility contract here (same seed => same samples) should survive a
// standard-library upgrade, not just a rebuild.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mapcomb {

// SplitMix64 finalizer. Also the documented shard split function:
// shard s of a run seeded with S uses seed splitmix64(S + GOLDEN * (s + 1)).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t shard_seed(std::uint64_t master, std::uint64_t shard) {
  return splitmix64(master + 0x9e3779b97f4a7c15ULL * (shard + 1));
}

// xoshiro256** by Blackman/Vigna. Small state, fast, and fully specified
// here so the stream is ours to keep stable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : s_) {
      x += 0x9e3779b97f4a7c15ULL;
      w = splitmix64(x);
    }
  }

  std::uint64_t next() {
    auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by rejection (no modulo bias).
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound == 0) throw std::domain_error("Rng::uniform_below: zero bound");
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t s_[4];
};

}  // namespace mapcomb
