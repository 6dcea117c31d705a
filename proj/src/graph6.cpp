#include "extremal/graph6.hpp"

#include <cstdint>

namespace extremal {

namespace {

constexpr std::uint64_t kMaxVertices = 68719476735ULL; // 2^36 - 1

void append_size(std::string &out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  }
}

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - 63;
  if (value < 0 || value > 63)
    throw Graph6Error("graph6: character out of range");
  return value;
}

} // namespace

std::string encode_graph6(const Graph &g) {
  const auto n = static_cast<std::uint64_t>(g.vertex_count());
  std::string out;
  append_size(out, n);
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.vertex_count(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

Graph decode_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader))
    text.remove_prefix(kHeader.size());
  if (text.empty())
    throw Graph6Error("graph6: empty input");

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8)
      throw Graph6Error("graph6: truncated 8-byte size header");
    for (std::size_t i = 2; i < 8; ++i)
      n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
    if (n <= 258047)
      throw Graph6Error("graph6: non-canonical 8-byte size header");
    pos = 8;
  } else {
    if (text.size() < 4)
      throw Graph6Error("graph6: truncated 4-byte size header");
    for (std::size_t i = 1; i < 4; ++i)
      n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i]));
    if (n <= 62)
      throw Graph6Error("graph6: non-canonical 4-byte size header");
    pos = 4;
  }
  if (n > kMaxVertices || n > 1000000)
    throw Graph6Error("graph6: graph too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t groups = (bits + 5) / 6;
  if (text.size() - pos != groups)
    throw Graph6Error("graph6: expected " + std::to_string(groups) +
                      " data bytes, found " +
                      std::to_string(text.size() - pos));

  Graph g(static_cast<int>(n));
  std::uint64_t k = 0;
  for (Vertex j = 1; j < g.vertex_count(); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int value = sextet(text[pos + k / 6]);
      if ((value >> (5 - k % 6)) & 1)
        g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int last = sextet(text[pos + k / 6]);
    if ((last & ((1 << (6 - k % 6)) - 1)) != 0)
      throw Graph6Error("graph6: non-zero padding bits");
  }
  return g;
}

} // namespace extremal
