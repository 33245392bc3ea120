#pragma once

// Probability mass functions on a contiguous integer support, in two
// representations: double (usually produced through a log-space path) and
// exact rational. Conversion is one-way and explicit: exact -> float.

#include <iosfwd>
#include <vector>

#include "mapcomb/numeric.hpp"
#include "mapcomb/rng.hpp"

namespace mapcomb {

struct Pmf {
  long long min_value = 0;
  std::vector<double> p;

  long long max_value() const { return min_value + static_cast<long long>(p.size()) - 1; }
  double at(long long v) const {
    long long i = v - min_value;
    if (i < 0 || i >= static_cast<long long>(p.size())) return 0.0;
    return p[static_cast<size_t>(i)];
  }
  double total() const;
  double mean() const;

  // Checks non-negativity and total mass within tol; throws on violation.
  void validate(double tol = 1e-10) const;

  // "k,probability", one row per support point, 17 significant digits.
  void write_csv(std::ostream& os) const;
};

struct RationalPmf {
  long long min_value = 0;
  std::vector<BigRational> p;

  long long max_value() const { return min_value + static_cast<long long>(p.size()) - 1; }
  BigRational at(long long v) const {
    long long i = v - min_value;
    if (i < 0 || i >= static_cast<long long>(p.size())) return BigRational(0);
    return p[static_cast<size_t>(i)];
  }
  BigRational total() const;
  Pmf to_float() const;

  // Throws unless every entry is >= 0 and the total is exactly 1.
  void validate() const;

  // "k,numerator,denominator", probabilities in lowest terms.
  void write_csv(std::ostream& os) const;
};

// Inversion sampling; assumes pmf.validate() would pass. Linear scan, fine
// for small supports; build a CdfSampler for repeated draws from large laws.
long long sample_from(const Pmf& pmf, Rng& rng);

// Precomputed cumulative sums with binary-search inversion: O(log n) a draw.
class CdfSampler {
 public:
  explicit CdfSampler(const Pmf& pmf);
  long long operator()(Rng& rng) const;

 private:
  long long min_value_;
  std::vector<double> cum_;
};

}  // namespace mapcomb
