#include "mapcomb/bijection.hpp"

#include <algorithm>
#include <stdexcept>

namespace mapcomb {

Mapping mapping_from_sequence(const std::vector<std::int32_t>& x) {
  const auto n = static_cast<std::int32_t>(x.size());
  if (n == 0) throw std::invalid_argument("mapping_from_sequence: empty sequence");
  std::vector<std::int32_t> avail(static_cast<size_t>(n), 0);
  for (std::int32_t v : x) {
    if (v < 1 || v > n) throw std::invalid_argument("mapping_from_sequence: entry out of range [1, n]");
    avail[static_cast<size_t>(v - 1)]++;
  }

  std::vector<std::int32_t> f(static_cast<size_t>(n), -1);
  size_t pos = 0;
  std::vector<std::int32_t> batch;
  for (std::int32_t i = 0; i < n; ++i)
    if (avail[static_cast<size_t>(i)] == 0) batch.push_back(i);

  while (!batch.empty()) {
    std::vector<std::int32_t> next;
    for (std::int32_t i : batch) {
      std::int32_t img = x[pos++] - 1;
      f[static_cast<size_t>(i)] = img;
      if (--avail[static_cast<size_t>(img)] == 0) next.push_back(img);
    }
    std::sort(next.begin(), next.end());
    batch = std::move(next);
  }
  // No new exhaustions: the still-unassigned vertices are the cyclic part
  // and read the rest of x in increasing order.
  for (std::int32_t i = 0; i < n; ++i)
    if (f[static_cast<size_t>(i)] < 0) f[static_cast<size_t>(i)] = x[pos++] - 1;

  return Mapping::from_zero_based(std::move(f));
}

std::vector<std::int32_t> sequence_from_mapping(const Mapping& f) {
  const auto n = static_cast<std::int32_t>(f.n());
  std::vector<std::int32_t> avail = in_degrees(f).d;
  std::vector<std::int32_t> x(static_cast<size_t>(n), 0);
  size_t pos = 0;
  std::vector<std::int32_t> batch;
  for (std::int32_t i = 0; i < n; ++i)
    if (avail[static_cast<size_t>(i)] == 0) batch.push_back(i);

  std::vector<std::uint8_t> written(static_cast<size_t>(n), 0);
  while (!batch.empty()) {
    std::vector<std::int32_t> next;
    for (std::int32_t i : batch) {
      x[pos++] = f(i) + 1;
      written[static_cast<size_t>(i)] = 1;
      std::int32_t j = f(i);
      if (--avail[static_cast<size_t>(j)] == 0) next.push_back(j);
    }
    std::sort(next.begin(), next.end());
    batch = std::move(next);
  }
  for (std::int32_t i = 0; i < n; ++i)
    if (!written[static_cast<size_t>(i)]) x[pos++] = f(i) + 1;

  return x;
}

long long tail_start(const std::vector<std::int32_t>& x) {
  const auto n = static_cast<std::int32_t>(x.size());
  if (n == 0) throw std::invalid_argument("tail_start: empty sequence");
  std::vector<std::uint8_t> seen(static_cast<size_t>(n) + 1, 0);
  for (std::int32_t t = n; t >= 1; --t) {
    std::int32_t v = x[static_cast<size_t>(t - 1)];
    if (v < 1 || v > n) throw std::invalid_argument("tail_start: entry out of range [1, n]");
    if (seen[static_cast<size_t>(v)]) return t + 1;
    seen[static_cast<size_t>(v)] = 1;
  }
  return 1;
}

}  // namespace mapcomb
