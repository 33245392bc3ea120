#pragma once

// Exact distributions of functional-graph statistics under the exchangeable
// in-degree model: number of cyclic vertices X_n, number of components N_n,
// connectedness, and component sizes in discovery order.
//
// Two independent routes exist for X_n and are kept separate on purpose:
//   * the general coefficient route, valid for every degree model, which
//     evaluates Pr{X=k} = k/(n-k) * E((D1-1) D1 D2 ... Dk | sum = n) by
//     contracting C(s) B(s)^(k-1) against the closed sum law, with
//     A = E(s^D), B = E(D s^D), C = E(D(D-1) s^D);
//   * per-family closed forms (preferential / anti-preferential urns, and
//     the Poisson specialization k (n)_k / n^(k+1)).
// cyclic_pmf() dispatches to the cheapest correct route; the _series and
// family-specific entry points stay public so tests can compare them.

#include <span>

#include "mapcomb/degree_models.hpp"
#include "mapcomb/numeric.hpp"
#include "mapcomb/pmf.hpp"
#include "mapcomb/rng.hpp"

namespace mapcomb {

// General coefficient route. Support 1..n. Exact mode is capped at n <= 64.
Pmf cyclic_pmf_series(const DegreeModel& model, long long n);
RationalPmf cyclic_pmf_series_exact(const DegreeModel& model, long long n);

// Preferential urn closed form: Pr{X=k} = k rho^k (1+rho) (n)_k / (n rho + k)_(k+1)
// for k < n, and rho^n n! / rising(n rho, n) at k = n. Log-space evaluation,
// good for n well past 10^5.
Pmf cyclic_pmf_pref(long long n, double rho);
RationalPmf cyclic_pmf_pref_exact(long long n, const BigRational& rho);

// Anti-preferential closed form (m >= 2):
// Pr{X=k} = (k/(n-k)) m^k (m-1) C(nm-k-1, n-k-1) / C(nm, n), and m^n / C(nm,n)
// at k = n. For m = 1 the law is the point mass at n (permutations).
Pmf cyclic_pmf_antipref(long long n, long long m);
RationalPmf cyclic_pmf_antipref_exact(long long n, long long m);

// Cheapest correct route for the model's family.
Pmf cyclic_pmf(const DegreeModel& model, long long n);
RationalPmf cyclic_pmf_exact(const DegreeModel& model, long long n);

// Pr{N = l} = sum_k |s(k,l)|/k! Pr{X = k}: a uniform random permutation of
// the cyclic vertices decides the component count.
Pmf component_count_pmf(const Pmf& x_pmf);
RationalPmf component_count_pmf_exact(const RationalPmf& x_pmf);

// Pr{connected} = sum_k Pr{X = k} / k.
double connectedness_prob(const Pmf& x_pmf);
BigRational connectedness_prob_exact(const RationalPmf& x_pmf);

// N_n as a sum of independent Bernoulli(1/k), k = 1..X: one draw given X,
// or with X itself drawn from its pmf first.
long long sample_component_count_xi(long long x_value, Rng& rng);
long long sample_component_count_xi(const Pmf& x_pmf, Rng& rng);

// Law of the size of the component containing vertex 1:
// Pr{C_1 = l} = (l/n) Pr{connected at size l} * block_factor(l), where the
// block factor is sum_pmf(l,l) sum_pmf(n-l,n-l) / sum_pmf(n,n).
Pmf component_size_pmf(const DegreeModel& model, long long n);
RationalPmf component_size_pmf_exact(const DegreeModel& model, long long n);
double component_size_at(const DegreeModel& model, long long n, long long ell);

// Joint law of the first k component sizes in discovery order; lengths must
// be >= 1 with partial sums <= n. The vacuous trailing factor at t_k = n is 1.
// Sequential component machinery for large n. Precomputes the per-size
// connectedness values (via O(1)-per-step ratio walks on the closed-form
// cyclic laws) and the diagonal of the sum law once; each component size row
// then costs O(remaining) flops. The chain is exact: conditioned on the
// first component taking ell of r remaining vertices, the rest of the
// structure is the same problem at r - ell, so sampling row by row draws
// from the exact joint law of the discovery-ordered sizes.
class ComponentStructure {
 public:
  ComponentStructure(const DegreeModel& model, long long n);

  long long n() const { return n_; }
  // Pr{mapping on ell vertices is connected}.
  double connectedness_at(long long ell) const;
  // Law of the next component size when `remaining` vertices are left.
  Pmf first_size_pmf(long long remaining) const;
  // All component sizes in discovery order; they sum to n().
  std::vector<long long> sample_sizes(Rng& rng) const;

 private:
  long long n_;
  std::vector<double> conn_;  // conn_[l-1] = B_l, l = 1..n
  std::vector<double> logw_;  // logw_[j] = log sum_pmf(j, j), j = 0..n
};

double joint_component_sizes_pmf(const DegreeModel& model, long long n,
                                 std::span<const long long> lengths);
BigRational joint_component_sizes_pmf_exact(const DegreeModel& model, long long n,
                                            std::span<const long long> lengths);

}  // namespace mapcomb
