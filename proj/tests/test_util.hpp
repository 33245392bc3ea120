#pragma once

// Shared test helpers: the model grid the oracle-backed tests sweep, and a
// chi-square goodness-of-fit p-value for empirical counts vs an exact law.

#include <string>
#include <utility>
#include <vector>

#include "mapcomb/degree_models.hpp"
#include "mapcomb/numeric.hpp"

namespace mapcomb::testutil {

// The six models of the verification grid.
inline std::vector<std::pair<std::string, DegreeModel>> grid_models() {
  std::vector<std::pair<std::string, DegreeModel>> out;
  out.emplace_back("poisson1", DegreeModel::poisson1());
  out.emplace_back("gnb(1/2)", DegreeModel::gen_neg_binomial(BigRational(1, 2)));
  out.emplace_back("gnb(1)", DegreeModel::gen_neg_binomial(BigRational(1)));
  out.emplace_back("gnb(2)", DegreeModel::gen_neg_binomial(BigRational(2)));
  out.emplace_back("binm(2)", DegreeModel::binomial_m(2));
  out.emplace_back("binm(3)", DegreeModel::binomial_m(3));
  return out;
}

// Pearson chi-square p-value of observed counts against exact cell
// probabilities summing to 1. A zero-probability cell with observations
// is an immediate fail (p = 0).
inline double chi_square_pvalue(const std::vector<long long>& counts,
                                const std::vector<double>& probs, long long total) {
  double stat = 0.0;
  long long dof = -1;  // the cell probabilities carry one linear constraint
  for (size_t i = 0; i < counts.size(); ++i) {
    const double expected = probs[i] * static_cast<double>(total);
    if (expected == 0.0) {
      if (counts[i] != 0) return 0.0;
      continue;
    }
    const double d = static_cast<double>(counts[i]) - expected;
    stat += d * d / expected;
    ++dof;
  }
  if (dof < 1) return 1.0;
  return chi_square_tail(stat, dof);
}

}  // namespace mapcomb::testutil
