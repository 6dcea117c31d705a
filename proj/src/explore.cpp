#include "extremal/explore.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "extremal/constructions.hpp"
#include "extremal/invariants.hpp"
#include "extremal/planarity.hpp"

namespace extremal {

namespace {

constexpr std::uint64_t kRestartLength = 20000;
constexpr double kStartTemperature = 2.0;
constexpr double kEndTemperature = 0.05;

struct Seed {
  std::string name;
  Graph graph;
};

// Greedy random planar graph: try vertex pairs in random order and keep
// those that preserve planarity. An edge-maximal planar graph on v >= 3
// vertices has 3v-6 edges, so N edges are always reached when 3v-6 >= N.
Graph random_planar(int N, int pool, std::mt19937_64 &rng) {
  const int used = std::min(pool, N / 2 + 4);
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < used; ++a)
    for (Vertex b = a + 1; b < used; ++b)
      pairs.push_back({a, b});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  Graph g(pool);
  for (const Edge &e : pairs) {
    if (g.edge_count() == N)
      break;
    g.add_edge(e.u, e.v);
    if (!is_planar(g))
      g.remove_edge(e.u, e.v);
  }
  return g;
}

std::vector<Seed> construction_seeds(int N, int pool) {
  std::vector<Seed> seeds;
  auto add = [&](std::string name, const Graph &g) {
    if (g.edge_count() == N && g.vertex_count() <= pool && is_planar(g))
      seeds.push_back({std::move(name), g.padded_to(pool)});
  };
  if (N == 30)
    add("icosahedron", build_icosahedron());
  if (N == 31)
    add("icosahedron-minus-edge-plus-wedge", build_i_double_prime());
  if (N == 32)
    add("icosahedron-plus-wedge", build_i_prime());
  add("shelling", build_planar_shelling(N));
  add("unrestricted-extremal", build_all_extremal(N));
  return seeds;
}

class Annealer {
public:
  Annealer(int pool, std::mt19937_64 &rng) : pool_(pool), rng_(rng) {}

  // Runs `steps` moves from `start`; returns the best graph seen.
  std::pair<Graph, std::int64_t> run(Graph start, std::uint64_t steps) {
    Graph current = std::move(start);
    std::int64_t current_value = specialty(current);
    Graph best = current;
    std::int64_t best_value = current_value;
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (std::uint64_t t = 0; t < steps; ++t) {
      const double frac = static_cast<double>(t) / static_cast<double>(steps);
      const double temperature =
          kStartTemperature * (1.0 - frac) + kEndTemperature * frac;

      const std::vector<Edge> edges = current.edges();
      const Edge removed =
          edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(
              rng_)];
      current.remove_edge(removed.u, removed.v);
      const auto added = pick_new_edge(current, removed);
      if (!added) {
        current.add_edge(removed.u, removed.v);
        continue;
      }
      current.add_edge(added->u, added->v);
      if (!is_planar(current)) {
        current.remove_edge(added->u, added->v);
        current.add_edge(removed.u, removed.v);
        continue;
      }
      const std::int64_t value = specialty(current);
      const auto delta = static_cast<double>(value - current_value);
      if (delta >= 0 || unit(rng_) < std::exp(delta / temperature)) {
        current_value = value;
        if (value > best_value) {
          best_value = value;
          best = current;
        }
      } else {
        current.remove_edge(added->u, added->v);
        current.add_edge(removed.u, removed.v);
      }
    }
    return {std::move(best), best_value};
  }

private:
  std::optional<Edge> pick_new_edge(const Graph &g, Edge removed) {
    std::vector<Vertex> active;
    std::vector<Vertex> idle;
    for (Vertex v = 0; v < pool_; ++v)
      (g.degree(v) > 0 ? active : idle).push_back(v);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int attempt = 0; attempt < 32; ++attempt) {
      auto pick = [&](const std::vector<Vertex> &from) {
        return from[std::uniform_int_distribution<std::size_t>(
            0, from.size() - 1)(rng_)];
      };
      if (active.empty())
        return Edge{0, 1};
      const Vertex a = pick(active);
      const bool fresh = !idle.empty() && (active.size() < 2 || unit(rng_) < 0.15);
      const Vertex b = fresh ? pick(idle) : pick(active);
      if (a == b || g.adjacent(a, b))
        continue;
      const Edge e{std::min(a, b), std::max(a, b)};
      if (e == removed)
        continue;
      return e;
    }
    return std::nullopt;
  }

  int pool_;
  std::mt19937_64 &rng_;
};

} // namespace

ExploreResult explore_planar(std::int64_t N, std::uint64_t budget,
                             std::uint64_t seed) {
  if (N < 10 || N > 32)
    throw std::out_of_range("planar exploration is limited to 10 <= N <= 32, got " +
                            std::to_string(N));
  const int edges = static_cast<int>(N);
  const int pool = edges + 2;
  std::mt19937_64 rng(seed);

  std::vector<Seed> seeds = construction_seeds(edges, pool);
  ExploreResult result;
  result.N = N;
  result.value = -1;
  for (const Seed &s : seeds) {
    const std::int64_t value = specialty(s.graph);
    if (value > result.value) {
      result.value = value;
      result.best = s.graph;
      result.origin = s.name;
    }
  }

  Annealer annealer(pool, rng);
  std::uint64_t remaining = budget;
  for (std::size_t restart = 0; remaining > 0; ++restart) {
    const std::uint64_t steps = std::min(remaining, kRestartLength);
    remaining -= steps;
    Seed start = restart < seeds.size()
                     ? seeds[restart]
                     : Seed{"random-" + std::to_string(restart),
                            random_planar(edges, pool, rng)};
    auto [graph, value] = annealer.run(std::move(start.graph), steps);
    result.iterations += steps;
    if (value > result.value) {
      result.value = value;
      result.best = std::move(graph);
      result.origin = start.name;
    }
  }
  if (result.value < 0) {
    // No seed and no budget: fall back to one random planar graph.
    result.best = random_planar(edges, pool, rng);
    result.value = specialty(result.best);
    result.origin = "random";
  }
  result.best = result.best.without_isolated_vertices();
  return result;
}

} // namespace extremal
