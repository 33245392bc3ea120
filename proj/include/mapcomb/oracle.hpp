#pragma once

// Brute-force reference laws. Enumerates every mapping f: [n] -> [n], weighs
// it by the exact model probability of its degree class, and tallies whatever
// statistic is asked for. Everything is exact rational arithmetic, so the
// calculator modules can be checked for equality, not just closeness. The
// enumeration is O(n^n) and refuses n > 8.

#include <cstdint>
#include <functional>
#include <ostream>
#include <utility>
#include <vector>

#include "mapcomb/degree_models.hpp"
#include "mapcomb/functional_graph.hpp"
#include "mapcomb/numeric.hpp"

namespace mapcomb {

// A finite law with exact probabilities, values ascending.
struct ExactLaw {
  std::vector<long long> values;
  std::vector<BigRational> probs;

  BigRational prob_of(long long v) const;
  BigRational total() const;
  // CSV rows "value,numerator,denominator", fractions in lowest terms.
  void write_csv(std::ostream& os) const;
};

enum class OracleStat {
  CyclicCount,         // number of cyclic vertices
  ComponentCount,      // number of connected components
  Connectedness,       // indicator, law on {0, 1}
  FirstComponentSize,  // size of the component containing vertex 1
};

// Calls fn for every one of the n^n mappings, in odometer order.
void enumerate_all_mappings(long long n, const std::function<void(const Mapping&)>& fn);

// Weighted enumeration: every mapping together with its exact probability
// under the model. Probabilities are memoized per sorted degree class and
// sum to exactly 1 over the full pass.
void enumerate_all(const DegreeModel& model, long long n,
                   const std::function<void(const Mapping&, const BigRational&)>& fn);

// Exact law of the statistic under the degree-conditioned model. With
// parallel = true the n first-image shards are tallied concurrently and
// merged in shard order; counts are integers, so the result is identical
// to the serial pass either way (tests assert this).
ExactLaw oracle_law(const DegreeModel& model, long long n, OracleStat stat,
                    bool parallel = true);

// Exact joint law of the first k component sizes (components ordered by
// smallest contained vertex). Only mappings with at least k components
// contribute, so the probabilities sum to Pr{at least k components}.
// Entries are sorted lexicographically by the size vector.
std::vector<std::pair<std::vector<long long>, BigRational>> oracle_joint_sizes(
    const DegreeModel& model, long long n, long long k, bool parallel = true);

}  // namespace mapcomb
