#include "extremal/constructions.hpp"

#include <algorithm>
#include <array>

#include "extremal/planarity.hpp"

namespace extremal {

namespace {

// Bit-matrix graphs grow quadratically; refuse sizes that would not fit.
constexpr std::int64_t kMaxVertices = 20000;

int checked_vertices(std::int64_t count) {
  if (count > kMaxVertices)
    throw std::invalid_argument("construction would need " +
                                std::to_string(count) +
                                " vertices (limit " +
                                std::to_string(kMaxVertices) + ")");
  return static_cast<int>(count);
}

void require_positive(std::int64_t N) {
  if (N < 1)
    throw std::invalid_argument("edge count must be >= 1, got " +
                                std::to_string(N));
}

} // namespace

Graph build_all_extremal(std::int64_t N) {
  const TriangularDecomposition d = decompose_triangular(N);
  const int n = checked_vertices(d.n + 1) - 1;
  const int m = static_cast<int>(d.m);
  const Vertex apex = n;
  Graph g(n + 1);

  switch (classify_all(d)) {
  case AllCase::CliquePlusApex:
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        g.add_edge(u, v);
    for (Vertex u = 0; u < m; ++u)
      g.add_edge(u, apex);
    break;
  case AllCase::NearCliqueNoUniversal:
    // Vertices 0..2m-1 form the near-clique (pairs 2i, 2i+1 missing),
    // 2m..n-1 the clique joined to everything but the apex.
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!(v < 2 * m && u % 2 == 0 && v == u + 1))
          g.add_edge(u, v);
    for (Vertex u = 0; u < 2 * m; ++u)
      g.add_edge(u, apex);
    break;
  case AllCase::CompleteMinusMatching:
    for (Vertex u = 0; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v)
        if (!(u % 2 == 0 && v == u + 1 && u / 2 < n - m))
          g.add_edge(u, v);
    break;
  }
  return g;
}

Graph build_bipartite_extremal(std::int64_t N) {
  const SquareDecomposition d = decompose_square(N);
  if (d.m <= d.n) {
    const int n = static_cast<int>(d.n);
    const int m = static_cast<int>(d.m);
    Graph g(checked_vertices(2 * d.n + 1));
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = n; v < 2 * n; ++v)
        g.add_edge(u, v);
    for (Vertex v = n; v < n + m; ++v)
      g.add_edge(v, 2 * n);
    return g;
  }
  const int side = static_cast<int>(d.n) + 1;
  const auto removed = static_cast<int>(2 * d.n + 1 - d.m);
  Graph g(checked_vertices(2 * d.n + 2));
  for (Vertex u = 0; u < side; ++u)
    for (Vertex v = side; v < 2 * side; ++v)
      if (!(u < removed && v == side + u))
        g.add_edge(u, v);
  return g;
}

Graph build_forest_extremal(std::int64_t N) {
  require_positive(N);
  Graph g(checked_vertices(N + 1));
  for (Vertex v = 0; v < static_cast<Vertex>(N); ++v)
    g.add_edge(v, v + 1);
  return g;
}

Graph build_planar_shelling(std::int64_t N) {
  if (N < 3)
    throw std::invalid_argument("shelling needs at least 3 edges");
  const int k = checked_vertices(N / 3 + 2);
  const int extra = static_cast<int>(N % 3);
  Graph g(k + (extra > 0 ? 1 : 0));
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  for (Vertex v = 3; v < k; ++v)
    for (Vertex back = 1; back <= 3; ++back)
      g.add_edge(v, v - back);
  if (extra >= 1)
    g.add_edge(k, k - 1);
  if (extra == 2)
    g.add_edge(k, k - 2);
  return g;
}

Graph build_planar_extremal(std::int64_t N) {
  if (N < 21)
    throw std::invalid_argument(
        "planar shelling construction is extremal only for N >= 21, got " +
        std::to_string(N));
  return build_planar_shelling(N);
}

Graph build_icosahedron() {
  // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
  Graph g(12);
  for (Vertex i = 0; i < 5; ++i) {
    const Vertex up = 1 + i;
    const Vertex up_next = 1 + (i + 1) % 5;
    const Vertex low = 6 + i;
    const Vertex low_next = 6 + (i + 1) % 5;
    g.add_edge(0, up);
    g.add_edge(up, up_next);
    g.add_edge(up, low);
    g.add_edge(up, low_next);
    g.add_edge(low, low_next);
    g.add_edge(low, 11);
  }
  const bool regular = std::all_of(g.degrees().begin(), g.degrees().end(),
                                   [](int d) { return d == 5; });
  if (g.edge_count() != 30 || !regular || !is_planar(g))
    throw std::logic_error("icosahedron edge list is corrupt");
  return g;
}

Graph build_i_prime() {
  Graph g = build_icosahedron();
  const Vertex extra = g.add_vertex();
  g.add_edge(extra, 0);
  g.add_edge(extra, 1);
  return g;
}

Graph build_i_double_prime() {
  Graph g = build_i_prime();
  g.remove_edge(0, 1);
  return g;
}

Graph build_extremal(Family family, std::int64_t N) {
  require_positive(N);
  switch (family) {
  case Family::All:
    return build_all_extremal(N);
  case Family::Bipartite:
    return build_bipartite_extremal(N);
  case Family::Forest:
    return build_forest_extremal(N);
  case Family::Planar:
    if (N == 30)
      return build_icosahedron();
    if (N == 31)
      return build_i_double_prime();
    if (N == 32)
      return build_i_prime();
    return build_planar_extremal(N);
  }
  throw std::invalid_argument("unknown family");
}

namespace {

struct HhShape {
  int max_degree;
  int min_degree;
};

HhShape hh_shape(const Graph &g) {
  const int k = g.vertex_count();
  if (k < 2)
    throw PreconditionError("hh_rewire needs at least 2 vertices");
  const auto [lo, hi] =
      std::minmax_element(g.degrees().begin(), g.degrees().end());
  if (*hi != k - 2)
    throw PreconditionError("hh_rewire needs maximum degree k-2 = " +
                            std::to_string(k - 2) + ", found " +
                            std::to_string(*hi));
  return {*hi, *lo};
}

Vertex missing_neighbor(const Graph &g, Vertex v) {
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (u != v && !g.adjacent(u, v))
      return u;
  return -1;
}

} // namespace

bool hh_conclusion_holds(const Graph &g) {
  const HhShape shape = hh_shape(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == shape.max_degree &&
        g.degree(missing_neighbor(g, v)) == shape.min_degree)
      return true;
  return false;
}

Graph hh_rewire(const Graph &g) {
  const HhShape shape = hh_shape(g);
  if (hh_conclusion_holds(g))
    return g;

  const int k = g.vertex_count();
  Vertex top = 0;
  while (g.degree(top) != shape.max_degree)
    ++top;
  // top misses exactly one vertex, `missed`, which is not of minimal degree,
  // so every minimal-degree vertex is a neighbour of top.
  const Vertex missed = missing_neighbor(g, top);
  Vertex low = 0;
  while (g.degree(low) != shape.min_degree)
    ++low;
  // deg(missed) > deg(low) guarantees a neighbour of `missed` outside
  // N(low) + {low}.
  Vertex pivot = -1;
  for (Vertex v = 0; v < k && pivot < 0; ++v)
    if (v != low && g.adjacent(v, missed) && !g.adjacent(v, low))
      pivot = v;
  if (pivot < 0)
    throw std::logic_error("hh_rewire: no switching vertex found");

  Graph out = g;
  out.remove_edge(top, low);
  out.remove_edge(pivot, missed);
  out.add_edge(pivot, low);
  out.add_edge(top, missed);
  return out;
}

} // namespace extremal
