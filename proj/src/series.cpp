#include "mapcomb/series.hpp"

#include <algorithm>

namespace mapcomb {

std::vector<double> series_mul(const std::vector<double>& a, const std::vector<double>& b,
                               std::size_t deg_cap, bool parallel) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = std::min(deg_cap + 1, a.size() + b.size() - 1);
  std::vector<double> out(out_len);
  const auto an = static_cast<long long>(a.size());
  const auto bn = static_cast<long long>(b.size());
#pragma omp parallel for schedule(static) if (parallel && out_len > 2048)
  for (long long t = 0; t < static_cast<long long>(out_len); ++t) {
    const long long lo = std::max(0LL, t - bn + 1);
    const long long hi = std::min(t, an - 1);
    StableSum s;
    for (long long i = lo; i <= hi; ++i)
      s.add(a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(t - i)]);
    out[static_cast<std::size_t>(t)] = s.value();
  }
  return out;
}

std::vector<BigRational> series_mul(const std::vector<BigRational>& a,
                                    const std::vector<BigRational>& b, std::size_t deg_cap) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = std::min(deg_cap + 1, a.size() + b.size() - 1);
  std::vector<BigRational> out(out_len, BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const std::size_t jmax = std::min(b.size(), out_len - std::min(out_len, i));
    for (std::size_t j = 0; j < jmax && i + j < out_len; ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::vector<double> series_pow(std::vector<double> base, long long e, std::size_t deg_cap,
                               bool parallel) {
  if (e < 0) throw std::domain_error("series_pow: negative exponent");
  std::vector<double> result{1.0};
  while (e > 0) {
    if (e & 1) result = series_mul(result, base, deg_cap, parallel);
    e >>= 1;
    if (e > 0) base = series_mul(base, base, deg_cap, parallel);
  }
  return result;
}

std::vector<BigRational> series_pow(std::vector<BigRational> base, long long e,
                                    std::size_t deg_cap) {
  if (e < 0) throw std::domain_error("series_pow: negative exponent");
  std::vector<BigRational> result{BigRational(1)};
  while (e > 0) {
    if (e & 1) result = series_mul(result, base, deg_cap);
    e >>= 1;
    if (e > 0) base = series_mul(base, base, deg_cap);
  }
  return result;
}

void series_trim(std::vector<double>& a) {
  while (a.size() > 1 && a.back() == 0.0) a.pop_back();
}

}  // namespace mapcomb
