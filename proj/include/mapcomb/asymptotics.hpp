#pragma once

// Limit laws for large n, plus the distance statistics the tests use to
// compare finite-n samples against them.

#include <functional>
#include <vector>

#include "mapcomb/degree_models.hpp"
#include "mapcomb/rng.hpp"

namespace mapcomb {

// X_n / sqrt(n) converges to a Rayleigh law with density
// (x / sigma2) exp(-x^2 / (2 sigma2)). The scale is rho/(1+rho) for the
// preferential family, m/(m-1) for the anti-preferential family (m >= 2;
// m = 1 keeps every vertex cyclic and has no such limit), and 1 for the
// Poisson family (uniform mappings). Custom models are not covered.
double cyclic_limit_sigma2(const DegreeModel& model);
double cyclic_limit_density(double sigma2, double x);
double cyclic_limit_cdf(double sigma2, double x);

// Leading-order E(X_n) = sqrt(pi sigma2 n / 2).
double cyclic_mean_asymptotic(const DegreeModel& model, long long n);

// The size of the component containing vertex 1, divided by n, converges to
// the law with density 1 / (2 sqrt(1-u)) on (0,1), cdf 1 - sqrt(1-u).
double component_fraction_density(double u);
double component_fraction_cdf(double u);

// (N_n - ln(n)/2) / sqrt(ln(n)/2) is asymptotically standard normal.
struct NormalScaling {
  double mean;
  double sd;
};
NormalScaling component_count_scaling(long long n);
double normal_cdf(double z);

// Ordered component fractions converge to the Poisson-Dirichlet law with
// parameter 1/2. One draw via residual sticks: W_i iid with
// Pr{W <= w} = 1 - sqrt(1-w) (Beta(1, 1/2)), P_i = W_i prod_{j<i} (1 - W_j),
// returned sorted descending. The unassigned tail after `sticks` sticks has
// expected mass 3^-sticks, far below double resolution at the default.
std::vector<double> sample_poisson_dirichlet_half(Rng& rng, int sticks = 64);

// Kolmogorov-Smirnov statistics: empirical vs a continuous cdf, and
// empirical vs empirical. Both sort copies of their inputs.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace mapcomb
