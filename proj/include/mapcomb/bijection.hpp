#pragma once

// The degree-class bijection between mappings with in-degree sequence d and
// sequences x in S_d (rearrangements of the multiset {1^d_1, ..., n^d_n}).
//
// Forward direction (sequence -> mapping) works in rounds on availability
// counters a_i = "arrows into i not yet spent": vertices whose counter is
// zero at the start (in-degree 0) form the first batch; each batch, taken in
// increasing order, reads its images off the next entries of x; spending
// those arrows exposes the next batch. When a round exposes no new vertex,
// the remaining ones (they carry the cycles) read the rest of x in
// increasing order, and the suffix of x they consume is exactly the set of
// cyclic vertices of the result.

#include <cstdint>
#include <vector>

#include "mapcomb/functional_graph.hpp"

namespace mapcomb {

// One-based entries, each in [1, n] where n = x.size(). The multiset of
// entries is the in-degree sequence of the result.
Mapping mapping_from_sequence(const std::vector<std::int32_t>& x);

// Inverse: replays the rounds of the forward construction, reading the
// batches off f itself, and writes f's images into the consumed positions.
std::vector<std::int32_t> sequence_from_mapping(const Mapping& f);

// Smallest t such that x_t, ..., x_n are pairwise distinct (1-based). That
// suffix, as a set, is the cyclic-vertex set of mapping_from_sequence(x).
long long tail_start(const std::vector<std::int32_t>& x);

}  // namespace mapcomb
