#pragma once

// Urn-scheme samplers for the two parametric mapping families, the
// degree-conditioned sampler that goes through the multiset bijection, and
// closed-form per-mapping probabilities for all three routes.
//
// Preferential urn: vertex weights start at rho and gain 1 every time the
// vertex is chosen as an image (images get popular). Anti-preferential urn:
// weights start at the integer m and lose 1 per selection (images get used
// up); m = 1 degenerates to a uniform random permutation.

#include <cstdint>
#include <span>
#include <vector>

#include "mapcomb/degree_models.hpp"
#include "mapcomb/functional_graph.hpp"
#include "mapcomb/numeric.hpp"
#include "mapcomb/rng.hpp"

namespace mapcomb {

// Binary-indexed cumulative-weight tree: O(log n) point update, prefix sum,
// and weighted selection.
class FenwickTree {
 public:
  FenwickTree(std::int32_t n, std::int64_t init);
  void add(std::int32_t i, std::int64_t delta);
  std::int64_t prefix(std::int32_t i) const;  // sum of [0, i]
  std::int64_t total() const { return total_; }
  // Smallest i with prefix(i) > r; requires 0 <= r < total().
  std::int32_t select(std::int64_t r) const;

 private:
  std::vector<std::int64_t> t_;
  std::int64_t total_;
  std::int32_t log2n_;
};

Mapping sample_preferential(std::int64_t n, double rho, Rng& rng);
// Same urn process but vertices choose their images in the given order
// (a permutation of [0, n)); the mapping law must not change. Exists so the
// exchangeability claim is testable.
Mapping sample_preferential_ordered(std::int64_t n, double rho,
                                    std::span<const std::int32_t> order, Rng& rng);

Mapping sample_antipreferential(std::int64_t n, std::int64_t m, Rng& rng);

// d from the conditioned degree law, a uniform shuffle of the multiset
// {1^d_1, ..., n^d_n}, then the bijection.
Mapping sample_conditioned_mapping(const DegreeModel& model, std::int64_t n, Rng& rng,
                                   CondSampleMethod method = CondSampleMethod::Auto);

// The canonical (sorted) arrangement of the degree multiset.
std::vector<std::int32_t> multiset_sequence(const DegreeSequence& d);

// Pr{T = f} under the exchangeable in-degree model.
double mapping_probability(const DegreeModel& model, const Mapping& f);
BigRational mapping_probability_exact(const DegreeModel& model, const Mapping& f);

// Closed forms for the urn families.
double mapping_probability_pref(std::int64_t n, double rho, const Mapping& f);
BigRational mapping_probability_pref_exact(std::int64_t n, const BigRational& rho, const Mapping& f);
double mapping_probability_antipref(std::int64_t n, std::int64_t m, const Mapping& f);
BigRational mapping_probability_antipref_exact(std::int64_t n, std::int64_t m, const Mapping& f);

}  // namespace mapcomb
