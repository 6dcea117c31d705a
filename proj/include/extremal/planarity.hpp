#pragma once

#include <optional>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

// Exact planarity test. Graphs with more than 3n-6 edges (n >= 3) are
// rejected before the embedding search.
bool is_planar(const Graph &g);

// Proper 2-colouring (0/1 per vertex) if one exists.
std::optional<std::vector<int>> two_coloring(const Graph &g);
bool is_bipartite(const Graph &g);

// Acyclic: edge_count == vertex_count - components.
bool is_forest(const Graph &g);

int component_count(const Graph &g);

} // namespace extremal
