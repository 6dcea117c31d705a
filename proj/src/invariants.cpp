#include "extremal/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>

namespace extremal {

std::int64_t specialty(const Graph &g) {
  std::int64_t total = 0;
  for (const Edge &e : g.edges())
    total += std::min(g.degree(e.u), g.degree(e.v));
  return total;
}

std::int64_t zagreb_first(const Graph &g) {
  std::int64_t total = 0;
  for (int d : g.degrees())
    total += static_cast<std::int64_t>(d) * d;
  return total;
}

std::int64_t zagreb_irregularity(const Graph &g) {
  std::int64_t total = 0;
  for (const Edge &e : g.edges())
    total += std::abs(g.degree(e.u) - g.degree(e.v));
  return total;
}

std::int64_t triangle_count(const Graph &g) {
  // Each triangle u<v<w is counted once from its edge uv via common
  // neighbours above v.
  std::int64_t total = 0;
  const std::size_t words = g.words_per_row();
  for (const Edge &e : g.edges()) {
    auto ru = g.row(e.u);
    auto rv = g.row(e.v);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t common = ru[w] & rv[w];
      const std::size_t first_above = static_cast<std::size_t>(e.v) + 1;
      if (w * 64 + 63 < first_above)
        continue;
      if (w * 64 < first_above)
        common &= ~std::uint64_t{0} << (first_above - w * 64);
      total += std::popcount(common);
    }
  }
  return total;
}

DegreeSequence degree_sequence(const Graph &g) {
  DegreeSequence seq{g.degrees()};
  std::sort(seq.degrees.begin(), seq.degrees.end(), std::greater<>());
  return seq;
}

bool has_universal_vertex(const Graph &g) {
  const int n = g.vertex_count();
  return std::any_of(g.degrees().begin(), g.degrees().end(),
                     [n](int d) { return d == n - 1; });
}

} // namespace extremal
