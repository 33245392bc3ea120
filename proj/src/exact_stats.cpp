#include "mapcomb/exact_stats.hpp"

#include <algorithm>
#include <cmath>

#include "mapcomb/series.hpp"

namespace mapcomb {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr long long kExactSeriesCap = 64;
constexpr long long kCustomSizeTableCap = 512;

void check_n(long long n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

void check_feasible(const DegreeModel& model, long long n) {
  if (!model.feasible(n))
    throw std::domain_error("conditioning event {sum of degrees = n} has probability zero");
}

}  // namespace

Pmf cyclic_pmf_series(const DegreeModel& model, long long n) {
  check_n(n);
  check_feasible(model, n);
  Pmf out;
  out.min_value = 1;
  out.p.assign(static_cast<size_t>(n), 0.0);

  const double denom = model.log_sum_pmf(n, n);
  const long long dmax = model.support_max(n);
  std::vector<double> b(static_cast<size_t>(dmax) + 1, 0.0);
  std::vector<double> c(static_cast<size_t>(dmax) + 1, 0.0);
  for (long long d = 0; d <= dmax; ++d) {
    const double p = model.pmf(d);
    b[static_cast<size_t>(d)] = static_cast<double>(d) * p;
    c[static_cast<size_t>(d)] = static_cast<double>(d) * static_cast<double>(d - 1) * p;
  }
  series_trim(b);
  series_trim(c);

  // Custom sum laws have no closed form; one DP table beats n^2 power calls.
  std::vector<std::vector<double>> table;
  if (model.family() == Family::Custom) table = model.log_sum_pmf_table(n - 1, n);
  auto tail = [&](long long j, long long r) {
    return table.empty() ? model.log_sum_pmf(j, r)
                         : table[static_cast<size_t>(j)][static_cast<size_t>(r)];
  };

  std::vector<double> cb = c;  // C * B^(k-1), truncated at degree n
  for (long long k = 1; k <= n - 1; ++k) {
    StableSum s;
    const auto tmax = std::min<long long>(n, static_cast<long long>(cb.size()) - 1);
    for (long long t = 0; t <= tmax; ++t) {
      const double w = cb[static_cast<size_t>(t)];
      if (w == 0.0) continue;
      const double lg = tail(n - k, n - t);
      if (lg == kNegInf) continue;
      s.add(w * std::exp(lg - denom));
    }
    out.p[static_cast<size_t>(k - 1)] =
        static_cast<double>(k) / static_cast<double>(n - k) * s.value();
    if (k < n - 1) cb = series_mul(cb, b, static_cast<size_t>(n));
  }

  const double lp1 = model.log_pmf(1);
  out.p[static_cast<size_t>(n - 1)] =
      lp1 == kNegInf ? 0.0 : std::exp(static_cast<double>(n) * lp1 - denom);
  return out;
}

RationalPmf cyclic_pmf_series_exact(const DegreeModel& model, long long n) {
  check_n(n);
  if (n > kExactSeriesCap)
    throw RefusalError("cyclic_pmf_series_exact: exact series mode is capped at n = 64");
  check_feasible(model, n);
  RationalPmf out;
  out.min_value = 1;
  out.p.assign(static_cast<size_t>(n), BigRational(0));

  const BigRational denom = model.core_sum_weight(n, n);
  const long long dmax = model.support_max(n);
  std::vector<BigRational> b(static_cast<size_t>(dmax) + 1, BigRational(0));
  std::vector<BigRational> c(static_cast<size_t>(dmax) + 1, BigRational(0));
  for (long long d = 0; d <= dmax; ++d) {
    const BigRational w = model.core_weight(d);
    b[static_cast<size_t>(d)] = d * w;
    c[static_cast<size_t>(d)] = d * (d - 1) * w;
  }

  // Exact sum-law table W[j][r] (core weights), one DP sweep.
  std::vector<std::vector<BigRational>> wtab(static_cast<size_t>(n),
                                             std::vector<BigRational>(static_cast<size_t>(n) + 1));
  {
    std::vector<BigRational> base(static_cast<size_t>(dmax) + 1);
    for (long long d = 0; d <= dmax; ++d) base[static_cast<size_t>(d)] = model.core_weight(d);
    std::vector<BigRational> row{BigRational(1)};
    for (long long j = 0; j <= n - 1; ++j) {
      for (long long r = 0; r <= n; ++r)
        wtab[static_cast<size_t>(j)][static_cast<size_t>(r)] =
            static_cast<size_t>(r) < row.size() ? row[static_cast<size_t>(r)] : BigRational(0);
      if (j < n - 1) row = series_mul(row, base, static_cast<size_t>(n));
    }
  }

  std::vector<BigRational> cb = c;
  for (long long k = 1; k <= n - 1; ++k) {
    BigRational s = 0;
    const auto tmax = std::min<long long>(n, static_cast<long long>(cb.size()) - 1);
    for (long long t = 0; t <= tmax; ++t) {
      if (cb[static_cast<size_t>(t)] == 0) continue;
      s += cb[static_cast<size_t>(t)] * wtab[static_cast<size_t>(n - k)][static_cast<size_t>(n - t)];
    }
    out.p[static_cast<size_t>(k - 1)] = BigRational(k, n - k) * s / denom;
    if (k < n - 1) cb = series_mul(cb, b, static_cast<size_t>(n));
  }

  BigRational w1 = model.core_weight(1);
  BigRational pn = 1;
  for (long long i = 0; i < n; ++i) pn *= w1;
  out.p[static_cast<size_t>(n - 1)] = pn / denom;
  return out;
}

Pmf cyclic_pmf_pref(long long n, double rho) {
  check_n(n);
  if (!(rho > 0.0) || !std::isfinite(rho))
    throw std::invalid_argument("cyclic_pmf_pref: rho must be positive and finite");
  Pmf out;
  out.min_value = 1;
  out.p.assign(static_cast<size_t>(n), 0.0);
  const double nr = static_cast<double>(n) * rho;
  const double lgnr = log_gamma(nr);
  for (long long k = 1; k <= n - 1; ++k) {
    double lg = std::log(static_cast<double>(k)) + static_cast<double>(k) * std::log(rho) +
                std::log1p(rho) + log_falling_factorial(static_cast<double>(n), k) -
                (log_gamma(nr + static_cast<double>(k) + 1.0) - lgnr);
    out.p[static_cast<size_t>(k - 1)] = std::exp(lg);
  }
  out.p[static_cast<size_t>(n - 1)] =
      std::exp(static_cast<double>(n) * std::log(rho) +
               log_gamma(static_cast<double>(n) + 1.0) - log_rising_factorial(nr, n));
  return out;
}

RationalPmf cyclic_pmf_pref_exact(long long n, const BigRational& rho) {
  check_n(n);
  if (rho <= 0) throw std::invalid_argument("cyclic_pmf_pref: rho must be positive");
  RationalPmf out;
  out.min_value = 1;
  out.p.assign(static_cast<size_t>(n), BigRational(0));
  const BigRational nr = rho * n;
  for (long long k = 1; k <= n - 1; ++k) {
    BigRational rk = 1;
    for (long long i = 0; i < k; ++i) rk *= rho;
    out.p[static_cast<size_t>(k - 1)] = k * rk * (1 + rho) *
                                        BigRational(falling_factorial(BigInt(n), k)) /
                                        falling_factorial(nr + k, k + 1);
  }
  BigRational rn = 1;
  for (long long i = 0; i < n; ++i) rn *= rho;
  out.p[static_cast<size_t>(n - 1)] = rn * BigRational(factorial(n)) / rising_factorial(nr, n);
  return out;
}

Pmf cyclic_pmf_antipref(long long n, long long m) {
  check_n(n);
  if (m < 1) throw std::invalid_argument("cyclic_pmf_antipref: m must be at least 1");
  Pmf out;
  out.min_value = 1;
  out.p.assign(static_cast<size_t>(n), 0.0);
  if (m == 1) {  // uniform random permutation: every vertex is cyclic
    out.p[static_cast<size_t>(n - 1)] = 1.0;
    return out;
  }
  const double dm = static_cast<double>(m);
  const double lcnm = log_binomial(static_cast<double>(n) * dm, n);
  for (long long k = 1; k <= n - 1; ++k) {
    double lg = std::log(static_cast<double>(k)) - std::log(static_cast<double>(n - k)) +
                static_cast<double>(k) * std::log(dm) + std::log(dm - 1.0) +
                log_binomial(static_cast<double>(n * m - k - 1), n - k - 1) - lcnm;
    out.p[static_cast<size_t>(k - 1)] = std::exp(lg);
  }
  out.p[static_cast<size_t>(n - 1)] = std::exp(static_cast<double>(n) * std::log(dm) - lcnm);
  return out;
}

RationalPmf cyclic_pmf_antipref_exact(long long n, long long m) {
  check_n(n);
  if (m < 1) throw std::invalid_argument("cyclic_pmf_antipref: m must be at least 1");
  RationalPmf out;
  out.min_value = 1;
  out.p.assign(static_cast<size_t>(n), BigRational(0));
  if (m == 1) {
    out.p[static_cast<size_t>(n - 1)] = 1;
    return out;
  }
  const BigInt cnm = binomial(n * m, n);
  for (long long k = 1; k <= n - 1; ++k) {
    BigInt mk = 1;
    for (long long i = 0; i < k; ++i) mk *= m;
    BigRational v = BigRational(k, n - k) * BigRational(mk * (m - 1), 1) *
                    BigRational(binomial(n * m - k - 1, n - k - 1), cnm);
    out.p[static_cast<size_t>(k - 1)] = v;
  }
  BigInt mn = 1;
  for (long long i = 0; i < n; ++i) mn *= m;
  out.p[static_cast<size_t>(n - 1)] = BigRational(mn, cnm);
  return out;
}

namespace {

// Poisson specialization of the coefficient route: with A = e^(s-1),
// B = s A, C = s^2 A, the ratio [s^n] C B^(k-1) A^(n-k) / [s^n] A^n collapses
// to n! / ((n-k-1)! n^(k+1)), so Pr{X=k} = k (n)_k / n^(k+1) for every
// k = 1..n (the k = n endpoint n!/n^n included).
Pmf cyclic_pmf_poisson(long long n) {
  Pmf out;
  out.min_value = 1;
  out.p.assign(static_cast<size_t>(n), 0.0);
  const double ln_n = std::log(static_cast<double>(n));
  for (long long k = 1; k <= n; ++k)
    out.p[static_cast<size_t>(k - 1)] =
        std::exp(std::log(static_cast<double>(k)) + log_falling_factorial(static_cast<double>(n), k) -
                 static_cast<double>(k + 1) * ln_n);
  return out;
}

RationalPmf cyclic_pmf_poisson_exact(long long n) {
  RationalPmf out;
  out.min_value = 1;
  out.p.assign(static_cast<size_t>(n), BigRational(0));
  BigInt npow = n;  // n^(k+1)
  for (long long k = 1; k <= n; ++k) {
    npow *= n;
    out.p[static_cast<size_t>(k - 1)] = BigRational(k * falling_factorial(BigInt(n), k), npow);
  }
  return out;
}

}  // namespace

Pmf cyclic_pmf(const DegreeModel& model, long long n) {
  switch (model.family()) {
    case Family::Poisson1:
      check_n(n);
      return cyclic_pmf_poisson(n);
    case Family::GenNegBinomial:
      return cyclic_pmf_pref(n, to_double(model.rho()));
    case Family::BinomialM:
      return cyclic_pmf_antipref(n, model.m());
    case Family::Custom:
      return cyclic_pmf_series(model, n);
  }
  throw std::logic_error("cyclic_pmf: unknown family");
}

RationalPmf cyclic_pmf_exact(const DegreeModel& model, long long n) {
  switch (model.family()) {
    case Family::Poisson1:
      check_n(n);
      return cyclic_pmf_poisson_exact(n);
    case Family::GenNegBinomial:
      return cyclic_pmf_pref_exact(n, model.rho());
    case Family::BinomialM:
      return cyclic_pmf_antipref_exact(n, model.m());
    case Family::Custom:
      return cyclic_pmf_series_exact(model, n);
  }
  throw std::logic_error("cyclic_pmf_exact: unknown family");
}

Pmf component_count_pmf(const Pmf& x_pmf) {
  if (x_pmf.min_value < 1 || x_pmf.p.empty())
    throw std::invalid_argument("component_count_pmf: expected a pmf on a subrange of {1..n}");
  const long long n = x_pmf.max_value();
  std::vector<StableSum> acc(static_cast<size_t>(n));

  if (n <= 300) {
    // Exact Stirling rows, converted per term: |s(k,l)|/k! <= 1 always.
    std::vector<BigInt> row{1};
    BigInt kfact = 1;
    for (long long k = 1; k <= n; ++k) {
      std::vector<BigInt> next(static_cast<size_t>(k) + 1);
      for (long long l = 0; l <= k; ++l) {
        BigInt v = 0;
        if (l <= k - 1) v += (k - 1) * row[static_cast<size_t>(l)];
        if (l >= 1) v += row[static_cast<size_t>(l - 1)];
        next[static_cast<size_t>(l)] = v;
      }
      row = std::move(next);
      kfact *= k;
      const double pk = x_pmf.at(k);
      if (pk == 0.0) continue;
      for (long long l = 1; l <= k; ++l)
        acc[static_cast<size_t>(l - 1)].add(to_double(BigRational(row[static_cast<size_t>(l)], kfact)) * pk);
    }
  } else {
    std::vector<double> lrow{kNegInf, 0.0};  // row k = 1
    for (long long k = 1; k <= n; ++k) {
      if (k > 1) log_stirling1_advance(lrow, k - 1);
      const double pk = x_pmf.at(k);
      if (pk == 0.0) continue;
      const double lkf = log_gamma(static_cast<double>(k) + 1.0);
      for (long long l = 1; l <= k; ++l) {
        const double lg = lrow[static_cast<size_t>(l)];
        if (lg == kNegInf) continue;
        acc[static_cast<size_t>(l - 1)].add(std::exp(lg - lkf) * pk);
      }
    }
  }

  Pmf out;
  out.min_value = 1;
  out.p.reserve(static_cast<size_t>(n));
  for (auto& s : acc) out.p.push_back(s.value());
  return out;
}

RationalPmf component_count_pmf_exact(const RationalPmf& x_pmf) {
  if (x_pmf.min_value < 1 || x_pmf.p.empty())
    throw std::invalid_argument("component_count_pmf: expected a pmf on a subrange of {1..n}");
  const long long n = x_pmf.max_value();
  if (n > 300) throw RefusalError("component_count_pmf_exact: exact Stirling rows capped at n = 300");
  std::vector<BigRational> acc(static_cast<size_t>(n), BigRational(0));
  std::vector<BigInt> row{1};
  BigInt kfact = 1;
  for (long long k = 1; k <= n; ++k) {
    std::vector<BigInt> next(static_cast<size_t>(k) + 1);
    for (long long l = 0; l <= k; ++l) {
      BigInt v = 0;
      if (l <= k - 1) v += (k - 1) * row[static_cast<size_t>(l)];
      if (l >= 1) v += row[static_cast<size_t>(l - 1)];
      next[static_cast<size_t>(l)] = v;
    }
    row = std::move(next);
    kfact *= k;
    const BigRational pk = x_pmf.at(k);
    if (pk == 0) continue;
    for (long long l = 1; l <= k; ++l)
      acc[static_cast<size_t>(l - 1)] += BigRational(row[static_cast<size_t>(l)], kfact) * pk;
  }
  RationalPmf out;
  out.min_value = 1;
  out.p = std::move(acc);
  return out;
}

double connectedness_prob(const Pmf& x_pmf) {
  if (x_pmf.min_value < 1)
    throw std::invalid_argument("connectedness_prob: expected support within {1..n}");
  StableSum s;
  for (size_t i = 0; i < x_pmf.p.size(); ++i)
    s.add(x_pmf.p[i] / static_cast<double>(x_pmf.min_value + static_cast<long long>(i)));
  return s.value();
}

BigRational connectedness_prob_exact(const RationalPmf& x_pmf) {
  if (x_pmf.min_value < 1)
    throw std::invalid_argument("connectedness_prob: expected support within {1..n}");
  BigRational s = 0;
  for (size_t i = 0; i < x_pmf.p.size(); ++i)
    s += x_pmf.p[i] / BigRational(x_pmf.min_value + static_cast<long long>(i));
  return s;
}

long long sample_component_count_xi(long long x_value, Rng& rng) {
  if (x_value < 1) throw std::domain_error("sample_component_count_xi: X must be at least 1");
  long long count = 1;  // k = 1 succeeds surely
  for (long long k = 2; k <= x_value; ++k)
    if (rng.uniform() * static_cast<double>(k) < 1.0) ++count;
  return count;
}

long long sample_component_count_xi(const Pmf& x_pmf, Rng& rng) {
  return sample_component_count_xi(sample_from(x_pmf, rng), rng);
}

namespace {

double log_block_factor(const DegreeModel& model, long long n, long long ell) {
  return model.log_sum_pmf(ell, ell) + model.log_sum_pmf(n - ell, n - ell) -
         model.log_sum_pmf(n, n);
}

BigRational block_factor_exact(const DegreeModel& model, long long n, long long ell) {
  return model.core_sum_weight(ell, ell) * model.core_sum_weight(n - ell, n - ell) /
         model.core_sum_weight(n, n);
}

}  // namespace

double component_size_at(const DegreeModel& model, long long n, long long ell) {
  check_n(n);
  if (ell < 1 || ell > n) throw std::domain_error("component_size_at: size out of range");
  check_feasible(model, n);
  const double conn = connectedness_prob(cyclic_pmf(model, ell));
  return static_cast<double>(ell) / static_cast<double>(n) * conn *
         std::exp(log_block_factor(model, n, ell));
}

Pmf component_size_pmf(const DegreeModel& model, long long n) {
  check_n(n);
  check_feasible(model, n);
  if (model.family() == Family::Custom && n > kCustomSizeTableCap)
    throw RefusalError("component_size_pmf: custom models capped at n = 512 (per-size series)");
  Pmf out;
  out.min_value = 1;
  out.p.assign(static_cast<size_t>(n), 0.0);
#pragma omp parallel for schedule(dynamic) if (n > 256)
  for (long long ell = 1; ell <= n; ++ell) {
    const double conn = connectedness_prob(cyclic_pmf(model, ell));
    out.p[static_cast<size_t>(ell - 1)] = static_cast<double>(ell) / static_cast<double>(n) *
                                          conn * std::exp(log_block_factor(model, n, ell));
  }
  return out;
}

RationalPmf component_size_pmf_exact(const DegreeModel& model, long long n) {
  check_n(n);
  check_feasible(model, n);
  RationalPmf out;
  out.min_value = 1;
  out.p.assign(static_cast<size_t>(n), BigRational(0));
  for (long long ell = 1; ell <= n; ++ell) {
    const BigRational conn = connectedness_prob_exact(cyclic_pmf_exact(model, ell));
    out.p[static_cast<size_t>(ell - 1)] =
        BigRational(ell, n) * conn * block_factor_exact(model, n, ell);
  }
  return out;
}

namespace {

// B_l = sum_k Pr{X_l = k}/k off the closed-form rows, advancing each row by
// the ratio p_(k+1)/p_k instead of re-evaluating log-gammas per entry. The
// ratio formulas cover the k = l endpoint too (checked against the log-space
// closed forms in the tests).
double connectedness_poisson(long long ell) {
  if (ell == 1) return 1.0;
  const double L = static_cast<double>(ell);
  double p = 1.0 / L;  // Pr{X = 1} = (l)_1 / l^2
  StableSum b;
  for (long long k = 1; k <= ell; ++k) {
    b.add(p / static_cast<double>(k));
    p *= (static_cast<double>(k + 1) / static_cast<double>(k)) * (L - static_cast<double>(k)) / L;
  }
  return b.value();
}

double connectedness_pref(long long ell, double rho) {
  if (ell == 1) return 1.0;
  const double L = static_cast<double>(ell);
  double p = rho * (1.0 + rho) * L / ((L * rho + 1.0) * (L * rho));
  StableSum b;
  for (long long k = 1; k <= ell; ++k) {
    b.add(p / static_cast<double>(k));
    p *= (static_cast<double>(k + 1) / static_cast<double>(k)) * rho *
         (L - static_cast<double>(k)) / (L * rho + static_cast<double>(k + 1));
  }
  return b.value();
}

double connectedness_antipref(long long ell, long long m) {
  if (m == 1) return 1.0 / static_cast<double>(ell);
  if (ell == 1) return 1.0;
  const double L = static_cast<double>(ell);
  const double dm = static_cast<double>(m);
  double p = std::exp(std::log(dm) + std::log(dm - 1.0) - std::log(L - 1.0) +
                      log_binomial(static_cast<double>(ell * m - 2), ell - 2) -
                      log_binomial(static_cast<double>(ell * m), ell));
  StableSum b;
  for (long long k = 1; k <= ell; ++k) {
    b.add(p / static_cast<double>(k));
    p *= (static_cast<double>(k + 1) / static_cast<double>(k)) * dm *
         (L - static_cast<double>(k)) / (L * dm - static_cast<double>(k + 1));
  }
  return b.value();
}

}  // namespace

ComponentStructure::ComponentStructure(const DegreeModel& model, long long n) : n_(n) {
  check_n(n);
  check_feasible(model, n);
  if (model.family() == Family::Custom && n > kCustomSizeTableCap)
    throw RefusalError("ComponentStructure: custom models capped at n = 512 (per-size series)");
  conn_.assign(static_cast<size_t>(n), 0.0);
  switch (model.family()) {
    case Family::Poisson1:
#pragma omp parallel for schedule(dynamic) if (n > 256)
      for (long long ell = 1; ell <= n; ++ell)
        conn_[static_cast<size_t>(ell - 1)] = connectedness_poisson(ell);
      break;
    case Family::GenNegBinomial: {
      const double rho = to_double(model.rho());
#pragma omp parallel for schedule(dynamic) if (n > 256)
      for (long long ell = 1; ell <= n; ++ell)
        conn_[static_cast<size_t>(ell - 1)] = connectedness_pref(ell, rho);
      break;
    }
    case Family::BinomialM: {
      const long long m = model.m();
#pragma omp parallel for schedule(dynamic) if (n > 256)
      for (long long ell = 1; ell <= n; ++ell)
        conn_[static_cast<size_t>(ell - 1)] = connectedness_antipref(ell, m);
      break;
    }
    case Family::Custom:
      for (long long ell = 1; ell <= n; ++ell)
        conn_[static_cast<size_t>(ell - 1)] = connectedness_prob(cyclic_pmf_series(model, ell));
      break;
  }
  logw_.assign(static_cast<size_t>(n) + 1, 0.0);
  if (model.family() == Family::Custom) {
    const auto table = model.log_sum_pmf_table(n, n);
    for (long long j = 0; j <= n; ++j)
      logw_[static_cast<size_t>(j)] = table[static_cast<size_t>(j)][static_cast<size_t>(j)];
  } else {
    for (long long j = 0; j <= n; ++j) logw_[static_cast<size_t>(j)] = model.log_sum_pmf(j, j);
  }
}

double ComponentStructure::connectedness_at(long long ell) const {
  if (ell < 1 || ell > n_) throw std::domain_error("connectedness_at: size out of range");
  return conn_[static_cast<size_t>(ell - 1)];
}

Pmf ComponentStructure::first_size_pmf(long long remaining) const {
  if (remaining < 1 || remaining > n_)
    throw std::domain_error("first_size_pmf: remaining out of range");
  Pmf out;
  out.min_value = 1;
  out.p.assign(static_cast<size_t>(remaining), 0.0);
  const double lw_r = logw_[static_cast<size_t>(remaining)];
  for (long long ell = 1; ell <= remaining; ++ell)
    out.p[static_cast<size_t>(ell - 1)] =
        static_cast<double>(ell) / static_cast<double>(remaining) *
        conn_[static_cast<size_t>(ell - 1)] *
        std::exp(logw_[static_cast<size_t>(ell)] + logw_[static_cast<size_t>(remaining - ell)] - lw_r);
  return out;
}

std::vector<long long> ComponentStructure::sample_sizes(Rng& rng) const {
  std::vector<long long> sizes;
  long long r = n_;
  while (r > 0) {
    const double u = rng.uniform();
    const double lw_r = logw_[static_cast<size_t>(r)];
    double cum = 0.0;
    long long pick = r;
    for (long long ell = 1; ell <= r; ++ell) {
      cum += static_cast<double>(ell) / static_cast<double>(r) *
             conn_[static_cast<size_t>(ell - 1)] *
             std::exp(logw_[static_cast<size_t>(ell)] + logw_[static_cast<size_t>(r - ell)] - lw_r);
      if (u < cum) {
        pick = ell;
        break;
      }
    }
    sizes.push_back(pick);
    r -= pick;
  }
  return sizes;
}

double joint_component_sizes_pmf(const DegreeModel& model, long long n,
                                 std::span<const long long> lengths) {
  check_n(n);
  if (lengths.empty()) throw std::domain_error("joint_component_sizes_pmf: no lengths given");
  check_feasible(model, n);
  long long t = 0;
  double result = 1.0;
  for (long long ell : lengths) {
    if (ell < 1) throw std::domain_error("joint_component_sizes_pmf: sizes must be at least 1");
    if (t + ell > n) throw std::domain_error("joint_component_sizes_pmf: sizes overshoot n");
    const double conn = connectedness_prob(cyclic_pmf(model, ell));
    result *= static_cast<double>(ell) / static_cast<double>(n - t) * conn *
              std::exp(model.log_sum_pmf(ell, ell));
    t += ell;
  }
  result *= std::exp(model.log_sum_pmf(n - t, n - t) - model.log_sum_pmf(n, n));
  return result;
}

BigRational joint_component_sizes_pmf_exact(const DegreeModel& model, long long n,
                                            std::span<const long long> lengths) {
  check_n(n);
  if (lengths.empty()) throw std::domain_error("joint_component_sizes_pmf: no lengths given");
  check_feasible(model, n);
  long long t = 0;
  BigRational result = 1;
  for (long long ell : lengths) {
    if (ell < 1) throw std::domain_error("joint_component_sizes_pmf: sizes must be at least 1");
    if (t + ell > n) throw std::domain_error("joint_component_sizes_pmf: sizes overshoot n");
    const BigRational conn = connectedness_prob_exact(cyclic_pmf_exact(model, ell));
    result *= BigRational(ell, n - t) * conn * model.core_sum_weight(ell, ell);
    t += ell;
  }
  result *= model.core_sum_weight(n - t, n - t) / model.core_sum_weight(n, n);
  return result;
}

}  // namespace mapcomb
