#include "extremal/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "extremal/canonical.hpp"
#include "extremal/graph6.hpp"

namespace extremal {

namespace {

// Depth at which the tree is cut into parts. Fixed, so the part list and
// everything derived from it are independent of the worker count.
constexpr int kSplitDepth = 4;

Edge ordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// The edge whose endpoints sit latest in the canonical order.
Edge canonical_deletion_edge(const Graph &g, const std::vector<Vertex> &order) {
  const int n = g.vertex_count();
  for (int hi = n - 1; hi > 0; --hi)
    for (int lo = hi - 1; lo >= 0; --lo) {
      const Vertex a = order[static_cast<std::size_t>(hi)];
      const Vertex b = order[static_cast<std::size_t>(lo)];
      if (g.adjacent(a, b))
        return ordered(a, b);
    }
  throw std::logic_error("canonical deletion edge requested on edgeless graph");
}

std::vector<std::uint64_t> edge_marked_certificate(const Graph &g, Edge e) {
  std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), 0);
  colors[static_cast<std::size_t>(e.u)] = 1;
  colors[static_cast<std::size_t>(e.v)] = 1;
  return canonical_labeling(g, colors).certificate;
}

// Is `added` in the same automorphism orbit of `child` as the child's
// canonical deletion edge?
bool is_canonical_extension(const Graph &child, Edge added,
                            const CanonicalLabeling &lab) {
  const Edge del = canonical_deletion_edge(child, lab.order);
  if (del == added)
    return true;
  auto degree_pair = [&](Edge e) {
    return std::minmax(child.degree(e.u), child.degree(e.v));
  };
  if (degree_pair(del) != degree_pair(added))
    return false;
  return edge_marked_certificate(child, del) ==
         edge_marked_certificate(child, added);
}

Graph relabel_by_order(const Graph &g, const std::vector<Vertex> &order) {
  std::vector<Vertex> new_label(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    new_label[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
  return g.relabeled(new_label);
}

void walk(const Graph &node, const EnumerationLimits &limits,
          bool visit_every_level, const GraphVisitor &visit) {
  if (visit_every_level || node.edge_count() == limits.edges)
    visit(node);
  if (node.edge_count() >= limits.edges)
    return;
  for (const Graph &child : augment(node, limits))
    walk(child, limits, visit_every_level, visit);
}

} // namespace

std::vector<Graph> augment(const Graph &parent, const EnumerationLimits &limits) {
  std::vector<Graph> out;
  if (parent.edge_count() >= limits.edges)
    return out;

  const int v = parent.vertex_count();
  std::set<std::vector<std::uint64_t>> seen;
  auto consider = [&](Graph child, Edge added) {
    if (!in_family(child, limits.family))
      return;
    CanonicalLabeling lab = canonical_labeling(child);
    if (!is_canonical_extension(child, added, lab))
      return;
    if (!seen.insert(lab.certificate).second)
      return;
    out.push_back(relabel_by_order(child, lab.order));
  };

  for (Vertex a = 0; a < v; ++a)
    for (Vertex b = a + 1; b < v; ++b)
      if (!parent.adjacent(a, b)) {
        Graph child = parent;
        child.add_edge(a, b);
        consider(std::move(child), {a, b});
      }
  if (v + 1 <= limits.vertex_cap)
    for (Vertex a = 0; a < v; ++a) {
      Graph child = parent.padded_to(v + 1);
      child.add_edge(a, v);
      consider(std::move(child), {a, v});
    }
  if (v + 2 <= limits.vertex_cap) {
    Graph child = parent.padded_to(v + 2);
    child.add_edge(v, v + 1);
    consider(std::move(child), {v, v + 1});
  }
  return out;
}

void for_each_class(const EnumerationLimits &limits, const GraphVisitor &visit) {
  walk(Graph(0), limits, true, visit);
}

PartitionedSearch::PartitionedSearch(const EnumerationLimits &limits)
    : limits_(limits) {
  if (limits.edges < 0)
    throw std::invalid_argument("negative edge count");
  frontier_.push_back(Graph(0));
  const int depth = std::min(limits.edges, kSplitDepth);
  for (int level = 0; level < depth; ++level) {
    std::vector<Graph> next;
    for (const Graph &g : frontier_)
      for (Graph &child : augment(g, limits))
        next.push_back(std::move(child));
    frontier_ = std::move(next);
  }
}

void PartitionedSearch::run_part(std::size_t i, const GraphVisitor &visit) const {
  walk(frontier_.at(i), limits_, false, visit);
}

void PartitionedSearch::run_parallel(
    int jobs, const std::function<void(std::size_t, const Graph &)> &visit) const {
  const std::size_t parts = frontier_.size();
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < parts; i = next++)
      run_part(i, [&](const Graph &g) { visit(i, g); });
  };
  if (workers == 1) {
    work();
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t)
    threads.emplace_back(work);
  for (auto &t : threads)
    t.join();
}

std::vector<Graph> enumerate_graphs(int N, Family family, int vertex_cap,
                                    int jobs) {
  if (N < 1)
    throw std::invalid_argument("edge count must be >= 1");
  if (vertex_cap < 2)
    throw std::invalid_argument("vertex cap must be >= 2");
  const PartitionedSearch search({N, vertex_cap, family});
  std::vector<std::vector<Graph>> per_part(search.part_count());
  search.run_parallel(jobs, [&](std::size_t part, const Graph &g) {
    per_part[part].push_back(g);
  });
  std::vector<Graph> out;
  for (auto &part : per_part)
    for (Graph &g : part)
      out.push_back(std::move(g));
  return out;
}

std::uint64_t estimated_classes(int edges) {
  // Graphs with k edges and no isolated vertices, k = 0..10.
  static constexpr std::array<std::uint64_t, 11> kExact = {
      1, 1, 2, 5, 11, 26, 68, 177, 497, 1476, 4613};
  std::uint64_t total = 0;
  std::uint64_t level = 0;
  for (int k = 0; k <= edges; ++k) {
    if (k < static_cast<int>(kExact.size()))
      level = kExact[static_cast<std::size_t>(k)];
    else if (level > UINT64_MAX / 8)
      return UINT64_MAX;
    else
      level *= 5; // successive ratios are ~3.1 at k = 10 and creep upwards
    if (total > UINT64_MAX - level)
      return UINT64_MAX;
    total += level;
  }
  return total;
}

} // namespace extremal
