#pragma once

// In-degree distributions and everything conditional on "the n degrees sum
// to n": joint and marginal conditioned laws, sum-of-iid laws (closed form
// per family, convolution as the generic cross-check), and conditioned
// sampling by rejection or sequential inversion.
//
// Families:
//   poisson1      Pr{D=k} = e^-1 / k!
//   gnb(rho)      Pr{D=k} = rising(rho,k)/k! * (rho/(1+rho))^rho * (1+rho)^-k
//                 (generalized negative binomial; sums stay in the family
//                 with rho -> j*rho)
//   binom(m)      Pr{D=k} = C(m,k) (1/m)^k (1-1/m)^(m-k)
//   custom        finite table
//
// Every family carries exact "core weights" w(k) with pmf(k) = c * w(k) for a
// constant c: conditioned quantities are ratios in which c^n cancels, so the
// exact-rational paths never see e^-1 or (rho/(1+rho))^rho.

#include <string>
#include <vector>

#include "mapcomb/functional_graph.hpp"
#include "mapcomb/numeric.hpp"
#include "mapcomb/pmf.hpp"
#include "mapcomb/rng.hpp"

namespace mapcomb {

enum class Family { Poisson1, GenNegBinomial, BinomialM, Custom };

enum class CondSampleMethod { Auto, Rejection, Sequential };

class DegreeModel {
 public:
  static DegreeModel poisson1();
  static DegreeModel gen_neg_binomial(const BigRational& rho);  // rho > 0
  static DegreeModel binomial_m(long long m);                   // m >= 1
  // probs[k] = Pr{D=k}; must be non-negative and sum to 1 within 1e-9.
  static DegreeModel custom(std::vector<BigRational> probs);
  // Text file with "k probability" lines; '#' comments and blank lines allowed.
  static DegreeModel custom_from_file(const std::string& path);

  Family family() const { return family_; }
  const BigRational& rho() const { return rho_; }
  long long m() const { return m_; }
  std::string name() const;

  double pmf(long long k) const;
  double log_pmf(long long k) const;
  BigRational core_weight(long long k) const;

  // Pr{D_1 + ... + D_j = k}; j = 0 gives the point mass at 0.
  double sum_pmf(long long j, long long k) const;
  double log_sum_pmf(long long j, long long k) const;
  BigRational core_sum_weight(long long j, long long k) const;
  // Same quantity through truncated-polynomial powers; used to cross-check
  // the closed forms, and the native route for custom models.
  double sum_pmf_by_convolution(long long j, long long k) const;

  // Bulk table t[j][k] = log Pr{D_1 + ... + D_j = k} for j <= jmax, k <= kmax.
  // One DP sweep for custom models instead of quadratically many power calls.
  std::vector<std::vector<double>> log_sum_pmf_table(long long jmax, long long kmax) const;

  // Whether conditioning on sum = n is a positive-probability event.
  bool feasible(long long n) const;

  long long support_max(long long cap) const;

  // Conditioned joint law of the degree vector; requires sum(d) = n.
  double conditioned_joint_pmf(const DegreeSequence& d) const;
  double log_conditioned_joint_pmf(const DegreeSequence& d) const;
  BigRational conditioned_joint_pmf_exact(const DegreeSequence& d) const;

  // Conditioned marginal Pr{D-hat_1 = k}, 0 <= k <= n.
  double marginal_pmf(long long n, long long k) const;
  BigRational marginal_pmf_exact(long long n, long long k) const;
  RationalPmf marginal_distribution_exact(long long n) const;

  // One degree vector from the conditioned law. Auto picks rejection when
  // the acceptance probability Pr{sum = n} clears 1/sqrt(n) (exact closed
  // form for the three families, budgeted pilot for custom tables).
  DegreeSequence sample_conditioned(long long n, Rng& rng,
                                    CondSampleMethod method = CondSampleMethod::Auto) const;

  long long sample_base(Rng& rng) const;

 private:
  DegreeModel() = default;

  Family family_ = Family::Poisson1;
  BigRational rho_ = 0;         // gnb only
  double rho_d_ = 0.0;
  long long m_ = 0;             // binom only
  std::vector<BigRational> custom_;
  std::vector<double> custom_d_;
};

}  // namespace mapcomb
