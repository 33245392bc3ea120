#pragma once

// A mapping f: [n] -> [n] and the structure of its functional graph
// (arcs i -> f(i)): in-degrees, cyclic vertices, connected components.
// External representation is 1-based; storage is 0-based.

#include <cstdint>
#include <string>
#include <vector>

namespace mapcomb {

class Mapping {
 public:
  // One-based images: images[i] = f(i+1), each in [1, n]. Throws otherwise.
  explicit Mapping(const std::vector<std::int32_t>& one_based_images);

  // Zero-based fast path for samplers; entries are trusted (asserted in debug).
  static Mapping from_zero_based(std::vector<std::int32_t> images);

  std::int64_t n() const { return static_cast<std::int64_t>(img_.size()); }
  // f applied to a 0-based vertex, 0-based result.
  std::int32_t operator()(std::int32_t v) const { return img_[static_cast<size_t>(v)]; }
  const std::vector<std::int32_t>& images0() const { return img_; }

  // "f(1) f(2) ... f(n)" as 1-based integers, single line.
  std::string to_line() const;
  static Mapping parse_line(const std::string& line);

  bool operator==(const Mapping& o) const { return img_ == o.img_; }

 private:
  Mapping() = default;
  std::vector<std::int32_t> img_;
};

struct DegreeSequence {
  std::vector<std::int32_t> d;  // d[i] = |f^{-1}(i+1)|, sums to n
  std::int64_t n() const { return static_cast<std::int64_t>(d.size()); }
  bool operator==(const DegreeSequence& o) const { return d == o.d; }
};

struct GraphSummary {
  std::vector<std::uint8_t> on_cycle;        // per-vertex flag
  std::vector<std::int32_t> component_id;    // per-vertex, ids in discovery order
  std::vector<std::int64_t> component_sizes; // indexed by component id
  std::int64_t cyclic_count = 0;
  std::int64_t cycle_count = 0;

  std::int64_t component_count() const { return static_cast<std::int64_t>(component_sizes.size()); }
};

DegreeSequence in_degrees(const Mapping& f);

// Vertices lying on a cycle of f, ascending, 1-based.
std::vector<std::int32_t> cyclic_vertices(const Mapping& f);

// Full structural summary. Components are numbered in discovery order:
// component 0 contains vertex 1, component 1 contains the smallest vertex
// not in component 0, and so on (the order the joint size laws are indexed in).
GraphSummary analyze(const Mapping& f);

std::int64_t core_cycle_count(const Mapping& f);

}  // namespace mapcomb
