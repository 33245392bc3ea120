#include "mapcomb/numeric.hpp"

#include <cctype>
#include <cstdlib>

namespace mapcomb {

namespace {

BigInt parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty integer part");
  const size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("parse_rational: bad digit in '" + s + "'");
  for (size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("parse_rational: bad digit in '" + s + "'");
  // cpp_int's string constructor treats a leading zero as an octal prefix,
  // so feed it the digits with that ambiguity stripped.
  size_t nz = s.find_first_not_of('0', start);
  BigInt mag(nz == std::string::npos ? "0" : s.substr(nz));
  return s[0] == '-' ? BigInt(-mag) : mag;
}

BigInt pow10(long long e) {
  BigInt r = 1;
  for (long long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

BigRational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return BigRational(num, den);
  }

  // Decimal, possibly with an exponent: [-]ddd[.ddd][e[-]dd]
  std::string s = text;
  long long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    exp10 = std::strtoll(s.c_str() + epos + 1, nullptr, 10);
    std::string etail = s.substr(epos + 1);
    if (etail.empty() || etail.find_first_not_of("+-0123456789") != std::string::npos)
      throw std::invalid_argument("parse_rational: bad exponent in '" + text + "'");
    s = s.substr(0, epos);
  }
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  auto dot = s.find('.');
  std::string digits = s;
  long long frac_len = 0;
  if (dot != std::string::npos) {
    digits = s.substr(0, dot) + s.substr(dot + 1);
    frac_len = static_cast<long long>(s.size() - dot - 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");

  const auto nz = digits.find_first_not_of('0');  // octal-prefix ambiguity again
  BigInt mant(nz == std::string::npos ? "0" : digits.substr(nz));
  if (neg) mant = -mant;
  long long net = exp10 - frac_len;
  if (net >= 0) return BigRational(mant * pow10(net), 1);
  return BigRational(mant, pow10(-net));
}

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error("log_gamma: argument must be finite and positive");
  return std::lgamma(x);
}

double falling_factorial(double m, long long k) {
  if (k < 0) throw std::domain_error("falling_factorial: negative k");
  double r = 1.0;
  for (long long i = 0; i < k; ++i) r *= m - static_cast<double>(i);
  return r;
}

BigInt falling_factorial(const BigInt& m, long long k) {
  if (k < 0) throw std::domain_error("falling_factorial: negative k");
  BigInt r = 1;
  for (long long i = 0; i < k; ++i) r *= m - i;
  return r;
}

BigRational falling_factorial(const BigRational& m, long long k) {
  if (k < 0) throw std::domain_error("falling_factorial: negative k");
  BigRational r = 1;
  for (long long i = 0; i < k; ++i) r *= m - i;
  return r;
}

BigRational rising_factorial(const BigRational& m, long long k) {
  if (k < 0) throw std::domain_error("rising_factorial: negative k");
  BigRational r = 1;
  for (long long i = 0; i < k; ++i) r *= m + i;
  return r;
}

double log_rising_factorial(double m, long long k) {
  if (k < 0) throw std::domain_error("rising_factorial: negative k");
  if (k == 0) return 0.0;
  if (m <= 0.0) throw std::domain_error("log_rising_factorial: m must be positive");
  return log_gamma(m + static_cast<double>(k)) - log_gamma(m);
}

double log_falling_factorial(double m, long long k) {
  if (k < 0) throw std::domain_error("falling_factorial: negative k");
  if (k == 0) return 0.0;
  if (m - static_cast<double>(k) + 1.0 <= 0.0)
    throw std::domain_error("log_falling_factorial: factors must stay positive");
  return log_gamma(m + 1.0) - log_gamma(m - static_cast<double>(k) + 1.0);
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is C(n-k+i, i) * i! / i!
  }
  return r;
}

double log_binomial(double n, long long k) {
  if (k < 0) return -std::numeric_limits<double>::infinity();
  if (k == 0) return 0.0;
  if (n + 1.0 <= 0.0 || n - k + 1.0 <= 0.0) return -std::numeric_limits<double>::infinity();
  return log_gamma(n + 1.0) - log_gamma(static_cast<double>(k) + 1.0) - log_gamma(n - k + 1.0);
}

BigInt factorial(long long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

namespace {
constexpr long long kStirlingExactCap = 300;
}

std::vector<BigInt> stirling1_row(long long k) {
  if (k < 0) throw std::domain_error("stirling1_row: negative row");
  if (k > kStirlingExactCap)
    throw RefusalError("stirling1_row: exact rows capped at k = 300; use the log-space advance");
  std::vector<BigInt> row{1};  // |s(0,0)| = 1
  for (long long i = 0; i < k; ++i) {
    std::vector<BigInt> next(i + 2);
    for (long long l = 0; l <= i + 1; ++l) {
      BigInt v = 0;
      if (l <= i) v += i * row[l];
      if (l >= 1) v += row[l - 1];
      next[l] = v;
    }
    row = std::move(next);
  }
  return row;
}

BigInt stirling1_unsigned(long long k, long long l) {
  if (k < 0 || l < 0) throw std::domain_error("stirling1_unsigned: negative argument");
  if (l > k) return 0;
  return stirling1_row(k)[l];
}

void log_stirling1_advance(std::vector<double>& row, long long k) {
  if (static_cast<long long>(row.size()) != k + 1)
    throw std::invalid_argument("log_stirling1_advance: row size does not match k");
  const double neg_inf = -std::numeric_limits<double>::infinity();
  const double lk = k > 0 ? std::log(static_cast<double>(k)) : neg_inf;
  row.push_back(neg_inf);
  for (long long l = k + 1; l >= 0; --l) {
    double keep = (l <= k && k > 0) ? lk + row[l] : neg_inf;
    double carry = l >= 1 ? row[l - 1] : neg_inf;
    row[l] = log_add(keep, carry);
  }
}

// Regularized incomplete gamma by series (x < a+1) or continued fraction,
// standard Numerical-Recipes-shaped implementation.
double gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_q: need a > 0, x >= 0");
  if (x == 0.0) return 1.0;
  const double lga = log_gamma(a);
  if (x < a + 1.0) {
    // P(a,x) by series, return 1 - P.
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    return 1.0 - sum * std::exp(-x + a * std::log(x) - lga);
  }
  // Q(a,x) by Lentz continued fraction.
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - lga);
}

double chi_square_tail(double statistic, long long dof) {
  if (dof <= 0) throw std::domain_error("chi_square_tail: dof must be positive");
  if (statistic <= 0.0) return 1.0;
  return gamma_q(static_cast<double>(dof) / 2.0, statistic / 2.0);
}

}  // namespace mapcomb
