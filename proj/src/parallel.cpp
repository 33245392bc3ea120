#include "mapcomb/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mapcomb {

void apply_thread_env() {
  const char* v = std::getenv("MAPCOMB_THREADS");
  if (v == nullptr || *v == '\0') return;
  try {
    const int t = std::stoi(v);
    if (t >= 1) omp_set_num_threads(t);
  } catch (const std::exception&) {
    // Malformed values are ignored rather than fatal.
  }
}

int max_threads() { return omp_get_max_threads(); }

std::vector<long long> fold_histograms(const std::vector<std::vector<long long>>& shards) {
  std::vector<long long> out;
  for (const auto& h : shards) {
    if (h.size() > out.size()) out.resize(h.size(), 0);
    for (size_t i = 0; i < h.size(); ++i) out[i] += h[i];
  }
  return out;
}

std::vector<double> fold_samples(const std::vector<std::vector<double>>& shards) {
  std::vector<double> out;
  size_t total = 0;
  for (const auto& s : shards) total += s.size();
  out.reserve(total);
  for (const auto& s : shards) out.insert(out.end(), s.begin(), s.end());
  return out;
}

}  // namespace mapcomb
