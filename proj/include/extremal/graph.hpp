#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace extremal {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge &, const Edge &) = default;
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

// Simple undirected graph on vertices 0..vertex_count()-1.
//
// Adjacency is a bit matrix (one row of 64-bit words per vertex), so edge
// membership is O(1). Degrees and the edge count are kept in sync by
// add_edge/remove_edge. Values are meant to be built once and then shared
// read-only; every analysis function takes `const Graph &`.
class Graph {
public:
  Graph() = default;
  explicit Graph(int vertex_count);

  static Graph from_edges(int vertex_count, std::span<const Edge> edges);
  static Graph complete(int vertex_count);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (rows_[row_offset(u) + static_cast<std::size_t>(v) / 64] >>
            (static_cast<unsigned>(v) % 64)) &
           1U;
  }
  int degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
  const std::vector<int> &degrees() const { return degree_; }

  // Returns false when the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  // Returns false when the edge was absent.
  bool remove_edge(Vertex u, Vertex v);
  // Appends an isolated vertex and returns its label.
  Vertex add_vertex();

  // Edges with u < v, ordered lexicographically.
  std::vector<Edge> edges() const;
  std::vector<Vertex> neighbors(Vertex v) const;

  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {rows_.data() + row_offset(v), words_};
  }

  // Vertex v of this graph becomes vertex new_label[v] of the result.
  Graph relabeled(std::span<const Vertex> new_label) const;
  Graph complement() const;
  Graph without_isolated_vertices() const;
  // Adds isolated vertices until the graph has `vertex_count` vertices.
  Graph padded_to(int vertex_count) const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.rows_ == b.rows_;
  }

private:
  std::size_t row_offset(Vertex v) const {
    return static_cast<std::size_t>(v) * words_;
  }
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<int> degree_;
};

// Graphviz export, one undirected edge per line. Isolated vertices are
// listed on their own so they survive a round trip through dot tooling.
std::string to_dot(const Graph &g, const std::string &name = "G");

} // namespace extremal
