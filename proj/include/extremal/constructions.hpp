#pragma once

#include <cstdint>
#include <stdexcept>

#include "extremal/formulas.hpp"
#include "extremal/graph.hpp"

namespace extremal {

class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Labeling conventions (fixed, so outputs can be snapshot-tested):
//   clique vertices come first, the extra ("apex") vertex is last, and a
//   removed matching always pairs vertices 2i and 2i+1.

// Graph on n+1 vertices reaching max_specialty_all(N):
//   K_n plus an apex on m clique vertices, or
//   (K_2m minus a perfect matching) joined to K_{n-2m}, plus an apex on the
//   2m near-clique vertices, or
//   K_{n+1} minus n-m disjoint edges.
Graph build_all_extremal(std::int64_t N);

// Sides are 0..s-1 and s..2s-1; K_{n,n} plus an apex on m vertices of the
// second side, or K_{n+1,n+1} minus 2n+1-m disjoint edges.
Graph build_bipartite_extremal(std::int64_t N);

// Path on N+1 vertices.
Graph build_forest_extremal(std::int64_t N);

// Shelling: triangle v0 v1 v2, then each new vertex joined to the previous
// three until there are floor(N/3)+2 vertices, then one extra vertex on the
// last one (N = 1 mod 3) or last two (N = 2 mod 3) vertices. Requires
// N >= 21, where its specialty is 6N-36 / 6N-38.
Graph build_planar_extremal(std::int64_t N);
// Same construction without the size guard (N >= 3).
Graph build_planar_shelling(std::int64_t N);

// Icosahedron on 12 vertices; 5-regularity and planarity are checked.
Graph build_icosahedron();
// Icosahedron plus a vertex (label 12) joined to both ends of edge 0-1.
Graph build_i_prime();
// build_i_prime() without edge 0-1.
Graph build_i_double_prime();

// Extremal witness for a family, where a construction exists.
// Planar accepts N >= 21; for N in {30, 31, 32} the icosahedral graphs are
// returned since they beat the shelling there.
Graph build_extremal(Family family, std::int64_t N);

// Degree-sequence-preserving 2-switch: for a graph whose maximum degree is
// k-2 (k = vertex count), returns a graph with the same degrees and no
// smaller specialty in which some maximum-degree vertex misses exactly one
// vertex, of minimal degree. Returns g itself when that already holds.
// Throws PreconditionError otherwise.
Graph hh_rewire(const Graph &g);

// True if some maximum-degree vertex of degree k-2 is adjacent to all
// vertices except one of minimum degree.
bool hh_conclusion_holds(const Graph &g);

} // namespace extremal
