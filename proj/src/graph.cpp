#include "extremal/graph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace extremal {

namespace {

std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

// Calls f(v) for every set bit v of row, starting at vertex `from`.
template <class F>
void for_each_bit(std::span<const std::uint64_t> row, Vertex from, F &&f) {
  std::size_t w = static_cast<std::size_t>(from) / 64;
  if (w >= row.size())
    return;
  std::uint64_t word = row[w] & (~std::uint64_t{0} << (static_cast<unsigned>(from) % 64));
  for (;;) {
    while (word) {
      f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(word))));
      word &= word - 1;
    }
    if (++w == row.size())
      return;
    word = row[w];
  }
}

} // namespace

Graph::Graph(int vertex_count) {
  if (vertex_count < 0)
    throw std::invalid_argument("negative vertex count");
  n_ = vertex_count;
  words_ = words_for(n_);
  rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
  degree_.assign(static_cast<std::size_t>(n_), 0);
}

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const Edge &e : edges) {
    if (!g.add_edge(e.u, e.v))
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) +
                                  "-" + std::to_string(e.v));
  }
  return g;
}

Graph Graph::complete(int vertex_count) {
  Graph g(vertex_count);
  for (Vertex u = 0; u < vertex_count; ++u)
    for (Vertex v = u + 1; v < vertex_count; ++v)
      g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for graph on " +
                            std::to_string(n_) + " vertices");
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v))
    return false;
  rows_[row_offset(u) + static_cast<std::size_t>(v) / 64] |=
      std::uint64_t{1} << (static_cast<unsigned>(v) % 64);
  rows_[row_offset(v) + static_cast<std::size_t>(u) / 64] |=
      std::uint64_t{1} << (static_cast<unsigned>(u) % 64);
  ++degree_[static_cast<std::size_t>(u)];
  ++degree_[static_cast<std::size_t>(v)];
  ++m_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !adjacent(u, v))
    return false;
  rows_[row_offset(u) + static_cast<std::size_t>(v) / 64] &=
      ~(std::uint64_t{1} << (static_cast<unsigned>(v) % 64));
  rows_[row_offset(v) + static_cast<std::size_t>(u) / 64] &=
      ~(std::uint64_t{1} << (static_cast<unsigned>(u) % 64));
  --degree_[static_cast<std::size_t>(u)];
  --degree_[static_cast<std::size_t>(v)];
  --m_;
  return true;
}

Vertex Graph::add_vertex() {
  const std::size_t new_words = words_for(n_ + 1);
  if (new_words != words_) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_ + 1) *
                                        new_words,
                                    0);
    for (Vertex v = 0; v < n_; ++v)
      for (std::size_t w = 0; w < words_; ++w)
        rows[static_cast<std::size_t>(v) * new_words + w] =
            rows_[row_offset(v) + w];
    rows_ = std::move(rows);
    words_ = new_words;
  } else {
    rows_.resize(rows_.size() + words_, 0);
  }
  degree_.push_back(0);
  return n_++;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    for_each_bit(row(u), u + 1, [&](Vertex v) { out.push_back({u, v}); });
  return out;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(degree(v)));
  for_each_bit(row(v), 0, [&](Vertex u) { out.push_back(u); });
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> new_label) const {
  if (new_label.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("relabeling has wrong length");
  Graph out(n_);
  for (const Edge &e : edges())
    out.add_edge(new_label[static_cast<std::size_t>(e.u)],
                 new_label[static_cast<std::size_t>(e.v)]);
  return out;
}

Graph Graph::complement() const {
  Graph out(n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (!adjacent(u, v))
        out.add_edge(u, v);
  return out;
}

Graph Graph::without_isolated_vertices() const {
  std::vector<Vertex> label(static_cast<std::size_t>(n_), -1);
  int kept = 0;
  for (Vertex v = 0; v < n_; ++v)
    if (degree(v) > 0)
      label[static_cast<std::size_t>(v)] = kept++;
  Graph out(kept);
  for (const Edge &e : edges())
    out.add_edge(label[static_cast<std::size_t>(e.u)],
                 label[static_cast<std::size_t>(e.v)]);
  return out;
}

Graph Graph::padded_to(int vertex_count) const {
  if (vertex_count < n_)
    throw std::invalid_argument("cannot pad to fewer vertices");
  Graph out(vertex_count);
  for (const Edge &e : edges())
    out.add_edge(e.u, e.v);
  return out;
}

std::string to_dot(const Graph &g, const std::string &name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0)
      os << "  " << v << ";\n";
  for (const Edge &e : g.edges())
    os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace extremal
