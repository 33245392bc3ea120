#include "mapcomb/pmf.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <ostream>

namespace mapcomb {

double Pmf::total() const {
  StableSum s;
  for (double v : p) s.add(v);
  return s.value();
}

double Pmf::mean() const {
  StableSum s;
  for (size_t i = 0; i < p.size(); ++i)
    s.add(p[i] * static_cast<double>(min_value + static_cast<long long>(i)));
  return s.value();
}

void Pmf::validate(double tol) const {
  for (double v : p)
    if (!(v >= 0.0)) throw std::domain_error("Pmf: negative or NaN probability");
  double t = total();
  if (std::abs(t - 1.0) > tol) throw std::domain_error("Pmf: total mass " + std::to_string(t) + " is off by more than tolerance");
}

void Pmf::write_csv(std::ostream& os) const {
  os << "k,probability\n";
  char buf[64];
  for (size_t i = 0; i < p.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%lld,%.17g\n", min_value + static_cast<long long>(i), p[i]);
    os << buf;
  }
}

BigRational RationalPmf::total() const {
  BigRational t = 0;
  for (const auto& v : p) t += v;
  return t;
}

Pmf RationalPmf::to_float() const {
  Pmf out;
  out.min_value = min_value;
  out.p.reserve(p.size());
  for (const auto& v : p) out.p.push_back(to_double(v));
  return out;
}

void RationalPmf::validate() const {
  for (const auto& v : p)
    if (v < 0) throw std::domain_error("RationalPmf: negative probability");
  if (total() != 1) throw std::domain_error("RationalPmf: total mass is not exactly 1");
}

void RationalPmf::write_csv(std::ostream& os) const {
  os << "k,numerator,denominator\n";
  for (size_t i = 0; i < p.size(); ++i)
    os << (min_value + static_cast<long long>(i)) << ',' << numerator(p[i]) << ','
       << denominator(p[i]) << '\n';
}

long long sample_from(const Pmf& pmf, Rng& rng) {
  double u = rng.uniform();
  double acc = 0.0;
  for (size_t i = 0; i < pmf.p.size(); ++i) {
    acc += pmf.p[i];
    if (u < acc) return pmf.min_value + static_cast<long long>(i);
  }
  return pmf.max_value();  // guard against rounding at u ~ 1
}

CdfSampler::CdfSampler(const Pmf& pmf) : min_value_(pmf.min_value), cum_(pmf.p.size()) {
  if (pmf.p.empty()) throw std::invalid_argument("CdfSampler: empty pmf");
  double acc = 0.0;
  for (size_t i = 0; i < pmf.p.size(); ++i) {
    acc += pmf.p[i];
    cum_[i] = acc;
  }
}

long long CdfSampler::operator()(Rng& rng) const {
  const double u = rng.uniform() * cum_.back();
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
  const auto i = it == cum_.end() ? cum_.size() - 1 : static_cast<size_t>(it - cum_.begin());
  return min_value_ + static_cast<long long>(i);
}

}  // namespace mapcomb
