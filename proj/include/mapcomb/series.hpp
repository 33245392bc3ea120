#pragma once

// Truncated power-series arithmetic on coefficient vectors, double and exact
// rational. Product order is fixed per output coefficient, so the OpenMP and
// serial paths produce bit-identical results.

#include <cstddef>
#include <vector>

#include "mapcomb/numeric.hpp"

namespace mapcomb {

// (a * b) truncated to degree deg_cap. Double version uses compensated sums.
std::vector<double> series_mul(const std::vector<double>& a, const std::vector<double>& b,
                               std::size_t deg_cap, bool parallel = true);
std::vector<BigRational> series_mul(const std::vector<BigRational>& a,
                                    const std::vector<BigRational>& b, std::size_t deg_cap);

// base^e truncated to degree deg_cap, exponentiation by squaring. e >= 0.
std::vector<double> series_pow(std::vector<double> base, long long e, std::size_t deg_cap,
                               bool parallel = true);
std::vector<BigRational> series_pow(std::vector<BigRational> base, long long e,
                                    std::size_t deg_cap);

// Drops trailing zero coefficients (keeps at least one entry).
void series_trim(std::vector<double>& a);

}  // namespace mapcomb
