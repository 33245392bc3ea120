#include "mapcomb/functional_graph.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace mapcomb {

Mapping::Mapping(const std::vector<std::int32_t>& one_based_images) {
  if (one_based_images.empty()) throw std::invalid_argument("Mapping: n must be at least 1");
  const auto n = static_cast<std::int32_t>(one_based_images.size());
  img_.reserve(one_based_images.size());
  for (std::int32_t v : one_based_images) {
    if (v < 1 || v > n) throw std::invalid_argument("Mapping: image out of range [1, n]");
    img_.push_back(v - 1);
  }
}

Mapping Mapping::from_zero_based(std::vector<std::int32_t> images) {
  Mapping m;
#ifndef NDEBUG
  for (std::int32_t v : images) assert(v >= 0 && v < static_cast<std::int32_t>(images.size()));
#endif
  m.img_ = std::move(images);
  return m;
}

std::string Mapping::to_line() const {
  std::string out;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(img_[i] + 1);
  }
  return out;
}

Mapping Mapping::parse_line(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::int32_t> vals;
  long long v;
  while (in >> v) vals.push_back(static_cast<std::int32_t>(v));
  if (!in.eof()) throw std::invalid_argument("Mapping::parse_line: non-numeric token");
  return Mapping(vals);
}

DegreeSequence in_degrees(const Mapping& f) {
  DegreeSequence ds;
  ds.d.assign(static_cast<size_t>(f.n()), 0);
  for (std::int32_t i = 0; i < f.n(); ++i) ds.d[static_cast<size_t>(f(i))]++;
  return ds;
}

namespace {

// Marks cycle vertices and counts cycles with the usual three-color walk.
void mark_cycles(const Mapping& f, GraphSummary& out) {
  const auto n = static_cast<std::int32_t>(f.n());
  out.on_cycle.assign(static_cast<size_t>(n), 0);
  std::vector<std::uint8_t> color(static_cast<size_t>(n), 0);  // 0 new, 1 on path, 2 done
  std::vector<std::int32_t> path;
  for (std::int32_t start = 0; start < n; ++start) {
    if (color[static_cast<size_t>(start)] != 0) continue;
    path.clear();
    std::int32_t v = start;
    while (color[static_cast<size_t>(v)] == 0) {
      color[static_cast<size_t>(v)] = 1;
      path.push_back(v);
      v = f(v);
    }
    if (color[static_cast<size_t>(v)] == 1) {
      // Ran into our own path: v closes a new cycle.
      out.cycle_count++;
      std::int32_t w = v;
      do {
        out.on_cycle[static_cast<size_t>(w)] = 1;
        out.cyclic_count++;
        w = f(w);
      } while (w != v);
    }
    for (std::int32_t u : path) color[static_cast<size_t>(u)] = 2;
  }
}

struct Dsu {
  std::vector<std::int32_t> parent;
  explicit Dsu(std::int32_t n) : parent(static_cast<size_t>(n)) {
    for (std::int32_t i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }
  std::int32_t find(std::int32_t v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(b)] = a;
  }
};

}  // namespace

GraphSummary analyze(const Mapping& f) {
  const auto n = static_cast<std::int32_t>(f.n());
  GraphSummary out;
  mark_cycles(f, out);

  Dsu dsu(n);
  for (std::int32_t i = 0; i < n; ++i) dsu.unite(i, f(i));

  out.component_id.assign(static_cast<size_t>(n), -1);
  std::vector<std::int32_t> root_to_id(static_cast<size_t>(n), -1);
  for (std::int32_t v = 0; v < n; ++v) {
    std::int32_t r = dsu.find(v);
    if (root_to_id[static_cast<size_t>(r)] < 0) {
      root_to_id[static_cast<size_t>(r)] = static_cast<std::int32_t>(out.component_sizes.size());
      out.component_sizes.push_back(0);
    }
    std::int32_t id = root_to_id[static_cast<size_t>(r)];
    out.component_id[static_cast<size_t>(v)] = id;
    out.component_sizes[static_cast<size_t>(id)]++;
  }
  return out;
}

std::vector<std::int32_t> cyclic_vertices(const Mapping& f) {
  GraphSummary s;
  mark_cycles(f, s);
  std::vector<std::int32_t> out;
  for (std::int32_t v = 0; v < f.n(); ++v)
    if (s.on_cycle[static_cast<size_t>(v)]) out.push_back(v + 1);
  return out;
}

std::int64_t core_cycle_count(const Mapping& f) {
  GraphSummary s;
  mark_cycles(f, s);
  return s.cycle_count;
}

}  // namespace mapcomb
