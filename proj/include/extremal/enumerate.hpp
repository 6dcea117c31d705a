#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "extremal/formulas.hpp"
#include "extremal/graph.hpp"

namespace extremal {

struct EnumerationLimits {
  int edges = 0;       // target edge count
  int vertex_cap = 0;  // maximum number of (non-isolated) vertices
  Family family = Family::All;
};

using GraphVisitor = std::function<void(const Graph &)>;

// Children of a canonical parent under edge augmentation: one new edge
// between existing vertices, to one new vertex, or between two new
// vertices. A child is kept iff the added edge lies in the automorphism
// orbit of the child's canonical deletion edge, and only once per
// isomorphism class among siblings. Children are returned canonically
// labeled, in a deterministic order. Graphs never carry isolated vertices.
std::vector<Graph> augment(const Graph &parent, const EnumerationLimits &limits);

// Sequential depth-first walk over every class with at most limits.edges
// edges (the edgeless graph on zero vertices included), pruned by the
// family, which is closed under edge deletion for every supported family.
void for_each_class(const EnumerationLimits &limits, const GraphVisitor &visit);

// The search tree cut at a fixed depth: parts are the subtrees below the
// frontier nodes, listed in a deterministic order that does not depend on
// how many workers later process them.
class PartitionedSearch {
public:
  explicit PartitionedSearch(const EnumerationLimits &limits);

  std::size_t part_count() const { return frontier_.size(); }
  // Visits the classes with exactly limits.edges edges inside part i.
  void run_part(std::size_t i, const GraphVisitor &visit) const;

  // Runs every part on `jobs` threads; `visit` receives the part index and
  // must only touch per-part state.
  void run_parallel(int jobs,
                    const std::function<void(std::size_t, const Graph &)>
                        &visit) const;

private:
  EnumerationLimits limits_;
  std::vector<Graph> frontier_;
};

// All classes with exactly N edges, no isolated vertices and at most
// vertex_cap vertices inside the family. Order is deterministic and the
// same for every job count.
std::vector<Graph> enumerate_graphs(int N, Family family, int vertex_cap,
                                    int jobs = 1);

// Upper estimate of how many classes an enumeration up to `edges` edges
// visits (sum over levels of graphs without isolated vertices).
std::uint64_t estimated_classes(int edges);

} // namespace extremal
