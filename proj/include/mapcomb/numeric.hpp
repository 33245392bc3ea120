#pragma once

// Arbitrary-precision rationals, log-space probability values, and the small
// pile of combinatorial special functions everything else is built from.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mapcomb {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Thrown when a request is outside the supported resource envelope (too large
// for exact enumeration, exact series, ...). Distinct from std::domain_error /
// std::invalid_argument so callers (and the CLI) can map it to a different
// exit code than a genuine mathematical failure.
struct RefusalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double to_double(const BigRational& r) { return r.convert_to<double>(); }

// Parses "3", "-2", "0.5", "2.25e-1", "1/2" into an exact rational.
BigRational parse_rational(const std::string& text);

// ln Gamma(x) for x > 0. Rejects non-positive and non-finite arguments.
double log_gamma(double x);

// log(exp(a) + exp(b)) without overflow; -inf represents zero.
inline double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  double hi = a > b ? a : b;
  double lo = a > b ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

// A probability carried in log space. Zero is representable (log() == -inf)
// and absorbing under multiplication.
class LogProb {
 public:
  LogProb() : lg_(-std::numeric_limits<double>::infinity()) {}
  static LogProb zero() { return LogProb(); }
  static LogProb one() { return from_log(0.0); }
  static LogProb from_log(double lg) {
    LogProb p;
    p.lg_ = lg;
    return p;
  }
  static LogProb from_linear(double v) {
    if (v < 0.0 || !std::isfinite(v)) throw std::domain_error("LogProb: negative or non-finite value");
    return from_log(v == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(v));
  }

  double log() const { return lg_; }
  double linear() const { return std::exp(lg_); }
  bool is_zero() const { return lg_ == -std::numeric_limits<double>::infinity(); }

  LogProb operator*(LogProb o) const {
    if (is_zero() || o.is_zero()) return zero();
    return from_log(lg_ + o.lg_);
  }
  LogProb operator/(LogProb o) const {
    if (o.is_zero()) throw std::domain_error("LogProb: division by zero");
    if (is_zero()) return zero();
    return from_log(lg_ - o.lg_);
  }
  LogProb operator+(LogProb o) const { return from_log(log_add(lg_, o.lg_)); }
  bool operator<(LogProb o) const { return lg_ < o.lg_; }
  bool operator==(LogProb o) const { return lg_ == o.lg_; }

 private:
  double lg_;
};

// Falling factorial (m)_k = m (m-1) ... (m-k+1); (m)_0 = 1.
double falling_factorial(double m, long long k);
BigInt falling_factorial(const BigInt& m, long long k);
BigRational falling_factorial(const BigRational& m, long long k);

// Rising factorial m (m+1) ... (m+k-1), used by the negative-binomial family.
BigRational rising_factorial(const BigRational& m, long long k);
double log_rising_factorial(double m, long long k);

// ln (m)_k for m - k + 1 > 0 (all factors positive); overflow-safe.
double log_falling_factorial(double m, long long k);

// Binomial coefficient; zero outside 0 <= k <= n, and C(0,0) = 1.
BigInt binomial(long long n, long long k);
double log_binomial(double n, long long k);

BigInt factorial(long long n);

// Unsigned Stirling numbers of the first kind |s(k,l)|: the number of
// permutations of k elements with exactly l cycles. Recurrence
// |s(k+1,l)| = k |s(k,l)| + |s(k,l-1)|. Exact rows are capped at k <= 300
// (they outgrow 64 bits at k = 21, and 300 rows of bignums is where exact
// mode stops being useful); the log-space row advance covers large k.
BigInt stirling1_unsigned(long long k, long long l);
std::vector<BigInt> stirling1_row(long long k);

// Advances row k of log|s(k,.)| to row k+1 in place (index l = 0..k+1).
// Seed with row 1 = {-inf, 0}.
void log_stirling1_advance(std::vector<double>& row, long long k);

// Neumaier-compensated accumulator for the convolution and pmf sums.
class StableSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Upper regularized incomplete gamma Q(a, x), and the chi-square tail
// probability built on it. Used by the statistical acceptance tests.
double gamma_q(double a, double x);
double chi_square_tail(double statistic, long long dof);

}  // namespace mapcomb
