#include "mapcomb/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mapcomb {

double cyclic_limit_sigma2(const DegreeModel& model) {
  switch (model.family()) {
    case Family::Poisson1:
      return 1.0;
    case Family::GenNegBinomial: {
      const double r = to_double(model.rho());
      return r / (1.0 + r);
    }
    case Family::BinomialM: {
      const auto m = model.m();
      if (m < 2) throw std::domain_error("cyclic_limit_sigma2: no limit law for m = 1");
      return static_cast<double>(m) / static_cast<double>(m - 1);
    }
    case Family::Custom:
      throw std::domain_error("cyclic_limit_sigma2: no closed form recorded for custom models");
  }
  throw std::logic_error("cyclic_limit_sigma2: unknown family");
}

double cyclic_limit_density(double sigma2, double x) {
  if (x <= 0.0) return 0.0;
  return x / sigma2 * std::exp(-x * x / (2.0 * sigma2));
}

double cyclic_limit_cdf(double sigma2, double x) {
  if (x <= 0.0) return 0.0;
  return -std::expm1(-x * x / (2.0 * sigma2));
}

double cyclic_mean_asymptotic(const DegreeModel& model, long long n) {
  constexpr double kPi = 3.14159265358979323846;
  return std::sqrt(kPi * cyclic_limit_sigma2(model) * static_cast<double>(n) / 2.0);
}

double component_fraction_density(double u) {
  if (u <= 0.0 || u >= 1.0) throw std::domain_error("component_fraction_density: u must lie in (0,1)");
  return 0.5 / std::sqrt(1.0 - u);
}

double component_fraction_cdf(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return 1.0 - std::sqrt(1.0 - u);
}

NormalScaling component_count_scaling(long long n) {
  if (n < 2) throw std::invalid_argument("component_count_scaling: n must be at least 2");
  const double half_log = 0.5 * std::log(static_cast<double>(n));
  return {half_log, std::sqrt(half_log)};
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

std::vector<double> sample_poisson_dirichlet_half(Rng& rng, int sticks) {
  if (sticks < 1) throw std::invalid_argument("sample_poisson_dirichlet_half: need at least one stick");
  std::vector<double> parts(static_cast<size_t>(sticks));
  double remaining = 1.0;
  for (int i = 0; i < sticks; ++i) {
    // Inverse cdf of Beta(1, 1/2): w = 1 - (1-u)^2.
    const double u = rng.uniform();
    const double w = 1.0 - (1.0 - u) * (1.0 - u);
    parts[static_cast<size_t>(i)] = remaining * w;
    remaining *= 1.0 - w;
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  const double inv_n = 1.0 / static_cast<double>(samples.size());
  double worst = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    worst = std::max(worst, std::abs(static_cast<double>(i + 1) * inv_n - f));
    worst = std::max(worst, std::abs(f - static_cast<double>(i) * inv_n));
  }
  return worst;
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_statistic: no samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double inv_a = 1.0 / static_cast<double>(a.size());
  const double inv_b = 1.0 / static_cast<double>(b.size());
  double worst = 0.0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    worst = std::max(worst, std::abs(static_cast<double>(i) * inv_a -
                                     static_cast<double>(j) * inv_b));
  }
  return worst;
}

}  // namespace mapcomb
