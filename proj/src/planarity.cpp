#include "extremal/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace extremal {

bool is_planar(const Graph &g) {
  const int n = g.vertex_count();
  if (n >= 3 && g.edge_count() > 3 * n - 6)
    return false;
  if (g.edge_count() < 9)
    return true; // smaller than K3,3, the smallest non-planar graph
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(n));
  for (const Edge &e : g.edges())
    boost::add_edge(static_cast<std::size_t>(e.u),
                    static_cast<std::size_t>(e.v), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<std::vector<int>> two_coloring(const Graph &g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1)
      continue;
    color[static_cast<std::size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u)) {
        auto &cv = color[static_cast<std::size_t>(v)];
        const int want = 1 - color[static_cast<std::size_t>(u)];
        if (cv == -1) {
          cv = want;
          stack.push_back(v);
        } else if (cv != want) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph &g) { return two_coloring(g).has_value(); }

int component_count(const Graph &g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Vertex> stack;
  int components = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)])
      continue;
    ++components;
    seen[static_cast<std::size_t>(s)] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u))
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          stack.push_back(v);
        }
    }
  }
  return components;
}

bool is_forest(const Graph &g) {
  return g.edge_count() == g.vertex_count() - component_count(g);
}

} // namespace extremal
