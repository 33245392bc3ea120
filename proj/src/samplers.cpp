#include "mapcomb/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mapcomb/bijection.hpp"

namespace mapcomb {

FenwickTree::FenwickTree(std::int32_t n, std::int64_t init)
    : t_(static_cast<size_t>(n) + 1, 0), total_(static_cast<std::int64_t>(n) * init) {
  if (n < 1) throw std::invalid_argument("FenwickTree: n must be at least 1");
  if (init < 0) throw std::invalid_argument("FenwickTree: negative initial weight");
  // t[i] covers (i - lowbit(i), i], so a constant fill is lowbit(i) * init.
  for (std::int32_t i = 1; i <= n; ++i) t_[static_cast<size_t>(i)] = (i & -i) * init;
  log2n_ = 0;
  while ((1 << (log2n_ + 1)) <= n) ++log2n_;
}

void FenwickTree::add(std::int32_t i, std::int64_t delta) {
  total_ += delta;
  for (std::int32_t k = i + 1; k < static_cast<std::int32_t>(t_.size()); k += k & -k)
    t_[static_cast<size_t>(k)] += delta;
}

std::int64_t FenwickTree::prefix(std::int32_t i) const {
  std::int64_t s = 0;
  for (std::int32_t k = i + 1; k > 0; k -= k & -k) s += t_[static_cast<size_t>(k)];
  return s;
}

std::int32_t FenwickTree::select(std::int64_t r) const {
  std::int32_t pos = 0;
  for (std::int32_t step = 1 << log2n_; step > 0; step >>= 1) {
    std::int32_t next = pos + step;
    if (next < static_cast<std::int32_t>(t_.size()) && t_[static_cast<size_t>(next)] <= r) {
      r -= t_[static_cast<size_t>(next)];
      pos = next;
    }
  }
  return pos;  // 0-based index of the selected item
}

namespace {

Mapping sample_preferential_impl(std::int64_t n, double rho,
                                 std::span<const std::int32_t> order, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_preferential: n must be at least 1");
  if (!(rho > 0.0) || !std::isfinite(rho))
    throw std::invalid_argument("sample_preferential: rho must be positive and finite");
  // Weight of vertex v is rho + count(v). The rho part stays uniform across
  // vertices, so one uniform double splits "base mass" from "added balls";
  // added balls live in an integer Fenwick tree and never touch floats.
  FenwickTree counts(static_cast<std::int32_t>(n), 0);
  const double base_mass = rho * static_cast<double>(n);
  std::vector<std::int32_t> img(static_cast<size_t>(n), 0);
  for (std::int64_t k = 0; k < n; ++k) {
    const std::int64_t added = k;  // balls added so far
    const double total = base_mass + static_cast<double>(added);
    const double u = rng.uniform() * total;
    std::int32_t v;
    if (u < base_mass || added == 0) {
      v = static_cast<std::int32_t>(u / rho);
      if (v >= n) v = static_cast<std::int32_t>(n) - 1;
    } else {
      auto r = static_cast<std::int64_t>(u - base_mass);
      if (r >= added) r = added - 1;
      v = counts.select(r);
    }
    img[static_cast<size_t>(order[static_cast<size_t>(k)])] = v;
    counts.add(v, 1);
  }
  return Mapping::from_zero_based(std::move(img));
}

}  // namespace

Mapping sample_preferential(std::int64_t n, double rho, Rng& rng) {
  std::vector<std::int32_t> order(static_cast<size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) order[static_cast<size_t>(i)] = static_cast<std::int32_t>(i);
  return sample_preferential_impl(n, rho, order, rng);
}

Mapping sample_preferential_ordered(std::int64_t n, double rho,
                                    std::span<const std::int32_t> order, Rng& rng) {
  if (static_cast<std::int64_t>(order.size()) != n)
    throw std::invalid_argument("sample_preferential_ordered: order size mismatch");
  std::vector<std::uint8_t> seen(static_cast<size_t>(n), 0);
  for (std::int32_t v : order) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("sample_preferential_ordered: order is not a permutation");
    seen[static_cast<size_t>(v)] = 1;
  }
  return sample_preferential_impl(n, rho, order, rng);
}

Mapping sample_antipreferential(std::int64_t n, std::int64_t m, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_antipreferential: n must be at least 1");
  if (m < 1) throw std::invalid_argument("sample_antipreferential: m must be at least 1");
  std::vector<std::int32_t> img(static_cast<size_t>(n));
  if (m == 1) {
    // Every urn holds one ball: the draws trace out a uniform permutation.
    for (std::int64_t i = 0; i < n; ++i) img[static_cast<size_t>(i)] = static_cast<std::int32_t>(i);
    for (std::int64_t i = n - 1; i > 0; --i) {
      auto j = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
      std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(j)]);
    }
    return Mapping::from_zero_based(std::move(img));
  }
  FenwickTree w(static_cast<std::int32_t>(n), m);
  for (std::int64_t k = 0; k < n; ++k) {
    auto r = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(w.total())));
    std::int32_t v = w.select(r);
    img[static_cast<size_t>(k)] = v;
    w.add(v, -1);
  }
  return Mapping::from_zero_based(std::move(img));
}

std::vector<std::int32_t> multiset_sequence(const DegreeSequence& d) {
  std::vector<std::int32_t> x;
  x.reserve(static_cast<size_t>(d.n()));
  for (std::int32_t i = 0; i < d.n(); ++i)
    for (std::int32_t c = 0; c < d.d[static_cast<size_t>(i)]; ++c) x.push_back(i + 1);
  return x;
}

Mapping sample_conditioned_mapping(const DegreeModel& model, std::int64_t n, Rng& rng,
                                   CondSampleMethod method) {
  DegreeSequence d = model.sample_conditioned(n, rng, method);
  std::vector<std::int32_t> x = multiset_sequence(d);
  for (std::int64_t i = n - 1; i > 0; --i) {
    auto j = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(x[static_cast<size_t>(i)], x[static_cast<size_t>(j)]);
  }
  return mapping_from_sequence(x);
}

double mapping_probability(const DegreeModel& model, const Mapping& f) {
  DegreeSequence d = in_degrees(f);
  double lg = model.log_conditioned_joint_pmf(d);
  if (lg == -std::numeric_limits<double>::infinity()) return 0.0;
  for (auto v : d.d) lg += log_gamma(static_cast<double>(v) + 1.0);
  lg -= log_gamma(static_cast<double>(f.n()) + 1.0);
  return std::exp(lg);
}

BigRational mapping_probability_exact(const DegreeModel& model, const Mapping& f) {
  DegreeSequence d = in_degrees(f);
  BigRational p = model.conditioned_joint_pmf_exact(d);
  if (p == 0) return 0;
  BigInt num = 1;
  for (auto v : d.d) num *= factorial(v);
  return p * BigRational(num, factorial(f.n()));
}

double mapping_probability_pref(std::int64_t n, double rho, const Mapping& f) {
  if (f.n() != n) throw std::invalid_argument("mapping_probability_pref: size mismatch");
  if (!(rho > 0.0)) throw std::invalid_argument("mapping_probability_pref: rho must be positive");
  DegreeSequence d = in_degrees(f);
  double lg = -log_rising_factorial(rho * static_cast<double>(n), n);
  for (auto v : d.d) lg += log_rising_factorial(rho, v);
  return std::exp(lg);
}

BigRational mapping_probability_pref_exact(std::int64_t n, const BigRational& rho, const Mapping& f) {
  if (f.n() != n) throw std::invalid_argument("mapping_probability_pref: size mismatch");
  if (rho <= 0) throw std::invalid_argument("mapping_probability_pref: rho must be positive");
  DegreeSequence d = in_degrees(f);
  BigRational p = 1;
  for (auto v : d.d) p *= rising_factorial(rho, v);  // (d + rho - 1) falling d
  return p / rising_factorial(rho * n, n);           // (n rho + n - 1) falling n
}

double mapping_probability_antipref(std::int64_t n, std::int64_t m, const Mapping& f) {
  return to_double(mapping_probability_antipref_exact(n, m, f));
}

BigRational mapping_probability_antipref_exact(std::int64_t n, std::int64_t m, const Mapping& f) {
  if (f.n() != n) throw std::invalid_argument("mapping_probability_antipref: size mismatch");
  if (m < 1) throw std::invalid_argument("mapping_probability_antipref: m must be at least 1");
  DegreeSequence d = in_degrees(f);
  BigInt num = 1;
  for (auto v : d.d) {
    if (v > m) return 0;  // falling factorial (m)_v crosses zero
    num *= falling_factorial(BigInt(m), v);
  }
  return BigRational(num, falling_factorial(BigInt(n * m), n));
}

}  // namespace mapcomb
