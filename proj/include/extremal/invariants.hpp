#pragma once

#include <cstdint>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

// Degrees in weakly decreasing order.
struct DegreeSequence {
  std::vector<int> degrees;

  friend bool operator==(const DegreeSequence &,
                         const DegreeSequence &) = default;
};

// Sum over edges uv of min(deg u, deg v). Isolated vertices contribute
// nothing, so padding a graph never changes its value.
std::int64_t specialty(const Graph &g);

// M1: sum of squared degrees.
std::int64_t zagreb_first(const Graph &g);

// M3 (irregularity): sum over edges uv of |deg u - deg v|.
std::int64_t zagreb_irregularity(const Graph &g);

std::int64_t triangle_count(const Graph &g);

DegreeSequence degree_sequence(const Graph &g);

// A vertex adjacent to every other vertex.
bool has_universal_vertex(const Graph &g);

} // namespace extremal
