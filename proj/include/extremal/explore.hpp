#pragma once

#include <cstdint>
#include <string>

#include "extremal/graph.hpp"

namespace extremal {

struct ExploreResult {
  std::int64_t N = 0;
  // Best specialty found; only a lower bound on the planar maximum.
  std::int64_t value = 0;
  Graph best;            // isolated vertices removed
  std::string origin;    // seed graph of the restart that produced `best`
  std::uint64_t iterations = 0;
};

// Seeded simulated annealing over planar graphs with exactly N edges
// (10 <= N <= 32). Moves relocate one edge (possibly onto a fresh vertex)
// and are rejected when they break planarity. Restarts cycle through a
// pool of known planar constructions plus random planar graphs. The result
// depends only on (N, budget, seed).
ExploreResult explore_planar(std::int64_t N, std::uint64_t budget,
                             std::uint64_t seed);

} // namespace extremal
