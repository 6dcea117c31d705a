#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

// Byte string identifying an isomorphism class. The bytes are the graph6
// encoding of the canonically relabeled graph, so a form can always be
// decoded back into a representative.
struct CanonicalForm {
  std::string bytes;

  friend bool operator==(const CanonicalForm &,
                         const CanonicalForm &) = default;
  friend auto operator<=>(const CanonicalForm &,
                          const CanonicalForm &) = default;
};

struct CanonicalLabeling {
  // order[i] is the vertex placed at canonical position i.
  std::vector<Vertex> order;
  // Permuted adjacency matrix (plus colours, when given). Equal
  // certificates <=> isomorphic (colour-preserving) inputs.
  std::vector<std::uint64_t> certificate;
  // Automorphisms discovered during the search, as vertex permutations.
  // They generate the full automorphism group.
  std::vector<std::vector<Vertex>> automorphisms;
};

// Partition refinement plus individualization, exploring the whole search
// tree modulo automorphism pruning. `colors`, when non-empty, gives an
// initial vertex colouring that isomorphisms must preserve.
CanonicalLabeling canonical_labeling(const Graph &g,
                                     std::span<const int> colors = {});

// Relabels g so that vertex order[i] becomes i.
Graph canonical_graph(const Graph &g);
CanonicalForm canonical_form(const Graph &g);

bool are_isomorphic(const Graph &a, const Graph &b);

// Orbits of the automorphism group on vertices: orbit[v] is the smallest
// vertex in v's orbit.
std::vector<Vertex> vertex_orbits(const Graph &g);

} // namespace extremal
