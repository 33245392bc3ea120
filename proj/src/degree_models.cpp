#include "mapcomb/degree_models.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mapcomb/series.hpp"

namespace mapcomb {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Custom models need O(n^2) tables for conditioned work; past this size the
// closed-form families are the supported route.
constexpr long long kCustomCondCap = 2048;

double normal_sample(Rng& rng) {
  // Box-Muller, one value per call (the discarded sine keeps the code dumb).
  double u1 = rng.uniform();
  while (u1 == 0.0) u1 = rng.uniform();
  double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

// Marsaglia-Tsang; shape < 1 boosted through shape+1.
double gamma_sample(double shape, Rng& rng) {
  if (shape < 1.0) {
    double u = rng.uniform();
    while (u == 0.0) u = rng.uniform();
    return gamma_sample(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = normal_sample(rng);
    double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    double v = t * t * t;
    double u = rng.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

long long poisson_sample(double lambda, Rng& rng) {
  long long k = 0;
  // Chunked Knuth product method; e^-lambda underflows past ~700.
  while (lambda > 500.0) {
    k += poisson_sample(500.0, rng);
    lambda -= 500.0;
  }
  const double limit = std::exp(-lambda);
  double prod = rng.uniform();
  while (prod > limit) {
    ++k;
    prod *= rng.uniform();
  }
  return k;
}

}  // namespace

DegreeModel DegreeModel::poisson1() {
  DegreeModel m;
  m.family_ = Family::Poisson1;
  return m;
}

DegreeModel DegreeModel::gen_neg_binomial(const BigRational& rho) {
  if (rho <= 0) throw std::invalid_argument("gen_neg_binomial: rho must be positive");
  DegreeModel m;
  m.family_ = Family::GenNegBinomial;
  m.rho_ = rho;
  m.rho_d_ = to_double(rho);
  return m;
}

DegreeModel DegreeModel::binomial_m(long long mm) {
  if (mm < 1) throw std::invalid_argument("binomial_m: m must be at least 1");
  DegreeModel m;
  m.family_ = Family::BinomialM;
  m.m_ = mm;
  return m;
}

DegreeModel DegreeModel::custom(std::vector<BigRational> probs) {
  if (probs.empty()) throw std::invalid_argument("custom: empty pmf");
  BigRational total = 0;
  for (const auto& p : probs) {
    if (p < 0) throw std::invalid_argument("custom: negative probability");
    total += p;
  }
  BigRational err = total - 1;
  if (err < 0) err = -err;
  if (err > BigRational(1, 1000000000))
    throw std::invalid_argument("custom: probabilities sum to " + total.str() + ", not 1 (tolerance 1e-9)");
  DegreeModel m;
  m.family_ = Family::Custom;
  m.custom_ = std::move(probs);
  m.custom_d_.reserve(m.custom_.size());
  for (const auto& p : m.custom_) m.custom_d_.push_back(to_double(p));
  return m;
}

DegreeModel DegreeModel::custom_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("custom_from_file: cannot open " + path);
  std::vector<BigRational> probs;
  std::vector<bool> seen;
  std::string line;
  long long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    long long k;
    std::string ptext;
    if (!(ls >> k)) {
      std::string rest;
      if (ls.clear(), ls >> rest)
        throw std::invalid_argument("custom_from_file: bad line " + std::to_string(lineno));
      continue;  // blank / comment-only line
    }
    if (!(ls >> ptext)) throw std::invalid_argument("custom_from_file: missing probability on line " + std::to_string(lineno));
    std::string extra;
    if (ls >> extra) throw std::invalid_argument("custom_from_file: trailing tokens on line " + std::to_string(lineno));
    if (k < 0) throw std::invalid_argument("custom_from_file: negative degree on line " + std::to_string(lineno));
    if (static_cast<size_t>(k) >= probs.size()) {
      probs.resize(static_cast<size_t>(k) + 1, BigRational(0));
      seen.resize(static_cast<size_t>(k) + 1, false);
    }
    if (seen[static_cast<size_t>(k)])
      throw std::invalid_argument("custom_from_file: duplicate degree " + std::to_string(k));
    seen[static_cast<size_t>(k)] = true;
    probs[static_cast<size_t>(k)] = parse_rational(ptext);
  }
  return custom(std::move(probs));
}

std::string DegreeModel::name() const {
  switch (family_) {
    case Family::Poisson1:
      return "poisson1";
    case Family::GenNegBinomial:
      return "gnb(" + rho_.str() + ")";
    case Family::BinomialM:
      return "binom(" + std::to_string(m_) + ")";
    case Family::Custom:
      return "custom";
  }
  return "?";
}

double DegreeModel::log_pmf(long long k) const {
  if (k < 0) throw std::domain_error("pmf: negative k");
  switch (family_) {
    case Family::Poisson1:
      return -1.0 - log_gamma(static_cast<double>(k) + 1.0);
    case Family::GenNegBinomial: {
      double r = rho_d_;
      return log_rising_factorial(r, k) - log_gamma(static_cast<double>(k) + 1.0) +
             r * (std::log(r) - std::log1p(r)) - static_cast<double>(k) * std::log1p(r);
    }
    case Family::BinomialM: {
      if (k > m_) return kNegInf;
      double lb = log_binomial(static_cast<double>(m_), k);
      double tail = (m_ - k) == 0 ? 0.0
                                  : static_cast<double>(m_ - k) *
                                        std::log1p(-1.0 / static_cast<double>(m_));
      return lb - static_cast<double>(k) * std::log(static_cast<double>(m_)) + tail;
    }
    case Family::Custom: {
      if (static_cast<size_t>(k) >= custom_d_.size() || custom_d_[static_cast<size_t>(k)] == 0.0)
        return kNegInf;
      return std::log(custom_d_[static_cast<size_t>(k)]);
    }
  }
  return kNegInf;
}

double DegreeModel::pmf(long long k) const {
  if (k < 0) throw std::domain_error("pmf: negative k");
  // Exactly-representable families go through the rational core so tests see
  // exact dyadic values.
  if (family_ == Family::BinomialM || family_ == Family::Custom) return to_double(core_weight(k));
  return std::exp(log_pmf(k));
}

BigRational DegreeModel::core_weight(long long k) const {
  if (k < 0) throw std::domain_error("core_weight: negative k");
  switch (family_) {
    case Family::Poisson1:
      return BigRational(1, factorial(k));
    case Family::GenNegBinomial: {
      BigRational w = rising_factorial(rho_, k);
      w /= BigRational(factorial(k));
      BigRational base = 1 / (1 + rho_);
      for (long long i = 0; i < k; ++i) w *= base;
      return w;
    }
    case Family::BinomialM: {
      if (k > m_) return 0;
      BigRational w(binomial(m_, k));
      BigRational inv_m(1, m_);
      for (long long i = 0; i < k; ++i) w *= inv_m;
      BigRational q(m_ - 1, m_);
      for (long long i = 0; i < m_ - k; ++i) w *= q;
      return w;
    }
    case Family::Custom:
      if (static_cast<size_t>(k) >= custom_.size()) return 0;
      return custom_[static_cast<size_t>(k)];
  }
  return 0;
}

double DegreeModel::log_sum_pmf(long long j, long long k) const {
  if (j < 0 || k < 0) throw std::domain_error("sum_pmf: negative argument");
  if (j == 0) return k == 0 ? 0.0 : kNegInf;
  switch (family_) {
    case Family::Poisson1: {
      double dj = static_cast<double>(j);
      return -dj + static_cast<double>(k) * std::log(dj) - log_gamma(static_cast<double>(k) + 1.0);
    }
    case Family::GenNegBinomial: {
      double r = rho_d_;
      double jr = static_cast<double>(j) * r;
      return log_rising_factorial(jr, k) - log_gamma(static_cast<double>(k) + 1.0) +
             jr * (std::log(r) - std::log1p(r)) - static_cast<double>(k) * std::log1p(r);
    }
    case Family::BinomialM: {
      if (m_ == 1) return k == j ? 0.0 : kNegInf;
      long long jm = j * m_;
      if (k > jm) return kNegInf;
      double tail = (jm - k) == 0 ? 0.0
                                  : static_cast<double>(jm - k) *
                                        std::log1p(-1.0 / static_cast<double>(m_));
      return log_binomial(static_cast<double>(jm), k) -
             static_cast<double>(k) * std::log(static_cast<double>(m_)) + tail;
    }
    case Family::Custom: {
      double v = sum_pmf_by_convolution(j, k);
      return v > 0.0 ? std::log(v) : kNegInf;
    }
  }
  return kNegInf;
}

double DegreeModel::sum_pmf(long long j, long long k) const {
  if (family_ == Family::Custom) return sum_pmf_by_convolution(j, k);
  double lg = log_sum_pmf(j, k);
  return lg == kNegInf ? 0.0 : std::exp(lg);
}

BigRational DegreeModel::core_sum_weight(long long j, long long k) const {
  if (j < 0 || k < 0) throw std::domain_error("core_sum_weight: negative argument");
  if (j == 0) return k == 0 ? 1 : 0;
  switch (family_) {
    case Family::Poisson1: {
      // (sum_d s^d/d!)^j = e^{js}: coefficient j^k / k!.
      BigInt jk = 1;
      for (long long i = 0; i < k; ++i) jk *= j;
      return BigRational(jk, factorial(k));
    }
    case Family::GenNegBinomial: {
      BigRational w = rising_factorial(j * rho_, k);
      w /= BigRational(factorial(k));
      BigRational base = 1 / (1 + rho_);
      for (long long i = 0; i < k; ++i) w *= base;
      return w;
    }
    case Family::BinomialM: {
      long long jm = j * m_;
      if (k > jm) return 0;
      BigRational w(binomial(jm, k));
      BigRational inv_m(1, m_);
      for (long long i = 0; i < k; ++i) w *= inv_m;
      BigRational q(m_ - 1, m_);
      for (long long i = 0; i < jm - k; ++i) w *= q;
      return w;
    }
    case Family::Custom: {
      auto powed = series_pow(custom_, j, static_cast<size_t>(k));
      if (static_cast<size_t>(k) >= powed.size()) return 0;
      return powed[static_cast<size_t>(k)];
    }
  }
  return 0;
}

double DegreeModel::sum_pmf_by_convolution(long long j, long long k) const {
  if (j < 0 || k < 0) throw std::domain_error("sum_pmf_by_convolution: negative argument");
  long long dmax = support_max(k);
  std::vector<double> base;
  base.reserve(static_cast<size_t>(dmax) + 1);
  for (long long d = 0; d <= dmax; ++d) base.push_back(pmf(d));
  series_trim(base);
  auto powed = series_pow(std::move(base), j, static_cast<size_t>(k));
  if (static_cast<size_t>(k) >= powed.size()) return 0.0;
  return powed[static_cast<size_t>(k)];
}

std::vector<std::vector<double>> DegreeModel::log_sum_pmf_table(long long jmax, long long kmax) const {
  if (jmax < 0 || kmax < 0) throw std::domain_error("log_sum_pmf_table: negative bound");
  if (family_ == Family::Custom) {
    std::vector<double> base;
    for (long long d = 0; d <= support_max(kmax); ++d) base.push_back(pmf(d));
    series_trim(base);
    std::vector<std::vector<double>> table(static_cast<size_t>(jmax) + 1);
    std::vector<double> row{1.0};
    for (long long j = 0; j <= jmax; ++j) {
      auto& lg = table[static_cast<size_t>(j)];
      lg.assign(static_cast<size_t>(kmax) + 1, kNegInf);
      for (size_t k = 0; k < row.size() && k <= static_cast<size_t>(kmax); ++k)
        if (row[k] > 0.0) lg[k] = std::log(row[k]);
      if (j < jmax) row = series_mul(row, base, static_cast<size_t>(kmax));
    }
    return table;
  }
  std::vector<std::vector<double>> table(static_cast<size_t>(jmax) + 1,
                                         std::vector<double>(static_cast<size_t>(kmax) + 1));
#pragma omp parallel for schedule(static) if (jmax * kmax > 65536)
  for (long long j = 0; j <= jmax; ++j)
    for (long long k = 0; k <= kmax; ++k)
      table[static_cast<size_t>(j)][static_cast<size_t>(k)] = log_sum_pmf(j, k);
  return table;
}

bool DegreeModel::feasible(long long n) const {
  if (n < 1) return false;
  if (family_ != Family::Custom) return true;  // every closed-form family reaches any sum
  if (n > 8192) throw RefusalError("feasible: custom models supported up to n = 8192");
  // Exactly n summands from the support hitting total n: count-indexed subset-sum.
  std::vector<long long> support;
  for (size_t d = 0; d < custom_.size() && d <= static_cast<size_t>(n); ++d)
    if (custom_[d] > 0) support.push_back(static_cast<long long>(d));
  std::vector<std::vector<bool>> reach(2, std::vector<bool>(static_cast<size_t>(n) + 1, false));
  reach[0][0] = true;
  for (long long i = 1; i <= n; ++i) {
    auto& cur = reach[static_cast<size_t>(i & 1)];
    const auto& prev = reach[static_cast<size_t>((i - 1) & 1)];
    std::fill(cur.begin(), cur.end(), false);
    for (long long s = 0; s <= n; ++s) {
      if (!prev[static_cast<size_t>(s)]) continue;
      for (long long d : support)
        if (s + d <= n) cur[static_cast<size_t>(s + d)] = true;
    }
    if (i == n) return cur[static_cast<size_t>(n)];
  }
  return false;
}

long long DegreeModel::support_max(long long cap) const {
  switch (family_) {
    case Family::BinomialM:
      return std::min(cap, m_);
    case Family::Custom:
      return std::min(cap, static_cast<long long>(custom_.size()) - 1);
    default:
      return cap;
  }
}

double DegreeModel::log_conditioned_joint_pmf(const DegreeSequence& d) const {
  const long long n = d.n();
  if (n < 1) throw std::invalid_argument("conditioned_joint_pmf: empty degree sequence");
  long long sum = 0;
  for (auto v : d.d) {
    if (v < 0) throw std::domain_error("conditioned_joint_pmf: negative degree");
    sum += v;
  }
  if (sum != n) throw std::domain_error("conditioned_joint_pmf: degrees must sum to n");
  double denom = log_sum_pmf(n, n);
  if (denom == kNegInf) throw std::domain_error("conditioned_joint_pmf: conditioning event has probability zero");
  double acc = 0.0;
  for (auto v : d.d) {
    double lp = log_pmf(v);
    if (lp == kNegInf) return kNegInf;
    acc += lp;
  }
  return acc - denom;
}

double DegreeModel::conditioned_joint_pmf(const DegreeSequence& d) const {
  double lg = log_conditioned_joint_pmf(d);
  return lg == kNegInf ? 0.0 : std::exp(lg);
}

BigRational DegreeModel::conditioned_joint_pmf_exact(const DegreeSequence& d) const {
  const long long n = d.n();
  if (n < 1) throw std::invalid_argument("conditioned_joint_pmf: empty degree sequence");
  long long sum = 0;
  for (auto v : d.d) {
    if (v < 0) throw std::domain_error("conditioned_joint_pmf: negative degree");
    sum += v;
  }
  if (sum != n) throw std::domain_error("conditioned_joint_pmf: degrees must sum to n");
  BigRational denom = core_sum_weight(n, n);
  if (denom == 0) throw std::domain_error("conditioned_joint_pmf: conditioning event has probability zero");
  BigRational acc = 1;
  for (auto v : d.d) {
    acc *= core_weight(v);
    if (acc == 0) return 0;
  }
  return acc / denom;
}

double DegreeModel::marginal_pmf(long long n, long long k) const {
  if (n < 1) throw std::invalid_argument("marginal_pmf: n must be at least 1");
  if (k < 0 || k > n) return 0.0;
  double denom = log_sum_pmf(n, n);
  if (denom == kNegInf) throw std::domain_error("marginal_pmf: conditioning event has probability zero");
  double num = log_pmf(k) + log_sum_pmf(n - 1, n - k);
  return num == kNegInf ? 0.0 : std::exp(num - denom);
}

BigRational DegreeModel::marginal_pmf_exact(long long n, long long k) const {
  if (n < 1) throw std::invalid_argument("marginal_pmf: n must be at least 1");
  if (k < 0 || k > n) return 0;
  BigRational denom = core_sum_weight(n, n);
  if (denom == 0) throw std::domain_error("marginal_pmf: conditioning event has probability zero");
  return core_weight(k) * core_sum_weight(n - 1, n - k) / denom;
}

RationalPmf DegreeModel::marginal_distribution_exact(long long n) const {
  if (n < 1) throw std::invalid_argument("marginal_distribution_exact: n must be at least 1");
  BigRational denom = core_sum_weight(n, n);
  if (denom == 0) throw std::domain_error("marginal_distribution_exact: conditioning event has probability zero");
  RationalPmf out;
  out.min_value = 0;
  out.p.reserve(static_cast<size_t>(n) + 1);
  for (long long k = 0; k <= n; ++k)
    out.p.push_back(core_weight(k) * core_sum_weight(n - 1, n - k) / denom);
  return out;
}

long long DegreeModel::sample_base(Rng& rng) const {
  switch (family_) {
    case Family::Poisson1:
      return poisson_sample(1.0, rng);
    case Family::GenNegBinomial: {
      double lambda = gamma_sample(rho_d_, rng) / rho_d_;
      return poisson_sample(lambda, rng);
    }
    case Family::BinomialM: {
      long long k = 0;
      const double p = 1.0 / static_cast<double>(m_);
      for (long long i = 0; i < m_; ++i)
        if (rng.uniform() < p) ++k;
      return k;
    }
    case Family::Custom: {
      double u = rng.uniform();
      double acc = 0.0;
      for (size_t d = 0; d < custom_d_.size(); ++d) {
        acc += custom_d_[d];
        if (u < acc) return static_cast<long long>(d);
      }
      return static_cast<long long>(custom_d_.size()) - 1;
    }
  }
  return 0;
}

DegreeSequence DegreeModel::sample_conditioned(long long n, Rng& rng,
                                               CondSampleMethod method) const {
  if (n < 1) throw std::invalid_argument("sample_conditioned: n must be at least 1");
  if (family_ == Family::Custom && n > 8192)
    throw RefusalError("sample_conditioned: custom models supported up to n = 8192");
  if (!feasible(n))
    throw std::domain_error("sample_conditioned: conditioning event has probability zero");

  if (method == CondSampleMethod::Auto) {
    const double threshold = 1.0 / std::sqrt(static_cast<double>(n));
    if (family_ != Family::Custom) {
      // Acceptance probability is Pr{sum = n}, known in closed form; no pilot
      // needed and no RNG state consumed by one.
      method = sum_pmf(n, n) >= threshold ? CondSampleMethod::Rejection
                                          : CondSampleMethod::Sequential;
    } else {
      // Budgeted pilot: up to 1000 attempted vectors or 2e6 base draws.
      long long attempts = 0, accepted = 0, budget = 2000000;
      while (attempts < 1000 && budget > 0) {
        ++attempts;
        long long sum = 0, i = 0;
        for (; i < n; ++i) {
          sum += sample_base(rng);
          --budget;
          if (sum > n) break;
        }
        if (i == n && sum == n) ++accepted;
      }
      double rate = attempts > 0 ? static_cast<double>(accepted) / static_cast<double>(attempts) : 0.0;
      method = rate >= threshold ? CondSampleMethod::Rejection : CondSampleMethod::Sequential;
    }
  }

  DegreeSequence out;
  out.d.assign(static_cast<size_t>(n), 0);

  if (method == CondSampleMethod::Rejection) {
    for (;;) {
      long long sum = 0;
      long long i = 0;
      for (; i < n; ++i) {
        long long v = sample_base(rng);
        sum += v;
        out.d[static_cast<size_t>(i)] = static_cast<std::int32_t>(v);
        if (sum > n) break;  // cannot recover, abandon the attempt
      }
      if (i == n && sum == n) return out;
    }
  }

  // Sequential inversion: d_i ~ pmf(d) * Pr{remaining r-1 degrees sum to s-d},
  // exactly the conditioned chain rule.
  if (family_ == Family::Custom && n > kCustomCondCap)
    throw RefusalError("sample_conditioned: sequential method for custom models supported up to n = 2048");
  std::vector<std::vector<double>> table;
  if (family_ == Family::Custom) table = log_sum_pmf_table(n - 1, n);

  auto tail_log = [&](long long j, long long k) {
    if (family_ == Family::Custom) return table[static_cast<size_t>(j)][static_cast<size_t>(k)];
    return log_sum_pmf(j, k);
  };

  long long s = n;
  std::vector<double> logw;
  for (long long i = 0; i < n; ++i) {
    const long long r = n - i;
    if (r == 1) {
      out.d[static_cast<size_t>(i)] = static_cast<std::int32_t>(s);
      s = 0;
      break;
    }
    const long long dmax = support_max(s);
    logw.assign(static_cast<size_t>(dmax) + 1, kNegInf);
    double best = kNegInf;
    for (long long d = 0; d <= dmax; ++d) {
      double lp = log_pmf(d);
      if (lp == kNegInf) continue;
      double lw = lp + tail_log(r - 1, s - d);
      logw[static_cast<size_t>(d)] = lw;
      if (lw > best) best = lw;
      // Weights are unimodal in d for the closed-form families (log-concave
      // factors), so once far below the peak we can stop.
      else if (family_ != Family::Custom && lw != kNegInf && lw < best - 80.0)
        break;
    }
    double total = 0.0;
    for (double lw : logw)
      if (lw != kNegInf) total += std::exp(lw - best);
    double u = rng.uniform() * total;
    double acc = 0.0;
    long long pick = -1;
    for (long long d = 0; d <= dmax; ++d) {
      if (logw[static_cast<size_t>(d)] == kNegInf) continue;
      acc += std::exp(logw[static_cast<size_t>(d)] - best);
      if (u < acc) {
        pick = d;
        break;
      }
    }
    if (pick < 0)  // rounding fell off the top; take the last feasible d
      for (long long d = dmax; d >= 0; --d)
        if (logw[static_cast<size_t>(d)] != kNegInf) {
          pick = d;
          break;
        }
    out.d[static_cast<size_t>(i)] = static_cast<std::int32_t>(pick);
    s -= pick;
  }
  return out;
}

}  // namespace mapcomb
