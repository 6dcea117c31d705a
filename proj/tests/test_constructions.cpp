#include <doctest.h>

#include <algorithm>
#include <random>

#include "extremal/constructions.hpp"
#include "extremal/formulas.hpp"
#include "extremal/invariants.hpp"
#include "extremal/planarity.hpp"
#include "support/oracles.hpp"

using namespace extremal;

namespace {

Graph named(int n, std::initializer_list<std::pair<char, char>> edges) {
  Graph g(n);
  for (auto [a, b] : edges)
    g.add_edge(a - 'a', b - 'a');
  return g;
}

} // namespace

TEST_SUITE("constructions") {

TEST_CASE("unrestricted witnesses achieve the closed form") {
  for (std::int64_t N = 1; N <= 10000; ++N) {
    const Graph g = build_all_extremal(N);
    const auto d = decompose_triangular(N);
    REQUIRE(g.edge_count() == N);
    REQUIRE(g.vertex_count() == d.n + 1);
    REQUIRE(specialty(g) == max_specialty_all(N).value);
    // Case ii is exactly the range with no universal vertex.
    REQUIRE(has_universal_vertex(g) ==
            (classify_all(d) != AllCase::NearCliqueNoUniversal));
  }
}

TEST_CASE("unrestricted witness examples") {
  const Graph g24 = build_all_extremal(24);
  CHECK(g24.vertex_count() == 8);
  for (int v = 0; v < 8; ++v)
    CHECK(g24.degree(v) == 6);
  CHECK(specialty(g24) == 144);

  CHECK(build_all_extremal(10) == Graph::complete(5));
  CHECK(specialty(build_all_extremal(10)) == 40);
  CHECK(specialty(build_all_extremal(2017)) == 127009);

  // Degenerate shapes: pendant on a clique and a complete graph.
  const Graph pendant = build_all_extremal(7);
  CHECK(degree_sequence(pendant).degrees == std::vector<int>{4, 3, 3, 3, 1});
  CHECK(build_all_extremal(6) == Graph::complete(4));
  // Labeling convention: apex last, missing pairs (2i, 2i+1).
  const Graph g31 = build_all_extremal(31);
  CHECK_FALSE(g31.adjacent(0, 1));
  CHECK_FALSE(g31.adjacent(4, 5));
  CHECK(g31.adjacent(5, 8));
  CHECK_FALSE(g31.adjacent(6, 8));
}

TEST_CASE("bipartite witnesses") {
  for (std::int64_t N = 1; N <= 10000; ++N) {
    const Graph g = build_bipartite_extremal(N);
    REQUIRE(g.edge_count() == N);
    REQUIRE(is_bipartite(g));
    REQUIRE(specialty(g) == max_specialty_bipartite(N).value);
  }
  const Graph g40 = build_bipartite_extremal(40);
  CHECK(g40.vertex_count() == 13);
  CHECK(g40.degree(12) == 4);
  CHECK(specialty(g40) == 232);

  const Graph g45 = build_bipartite_extremal(45);
  CHECK(g45.vertex_count() == 14);
  CHECK(degree_sequence(g45).degrees ==
        std::vector<int>{7, 7, 7, 7, 7, 7, 6, 6, 6, 6, 6, 6, 6, 6});
  CHECK(specialty(g45) == 279);

  const Graph g7 = build_bipartite_extremal(7);
  CHECK(degree_sequence(g7).degrees == std::vector<int>{3, 3, 2, 2, 2, 2});
  CHECK(specialty(g7) == 15);
}

TEST_CASE("forest witnesses") {
  for (std::int64_t N = 1; N <= 10000; ++N) {
    const Graph g = build_forest_extremal(N);
    REQUIRE(g.edge_count() == N);
    REQUIRE(is_forest(g));
    REQUIRE(specialty(g) == max_specialty_forest(N).value);
  }
  CHECK(specialty(build_forest_extremal(1)) == 1);
  CHECK(specialty(build_forest_extremal(5)) == 8);
  CHECK(specialty(build_forest_extremal(100)) == 198);
}

TEST_CASE("planar shelling witnesses") {
  CHECK(specialty(build_planar_extremal(42)) == 216);
  CHECK(specialty(build_planar_extremal(34)) == 166);
  CHECK(specialty(build_planar_extremal(21)) == 90);
  CHECK_THROWS_AS(build_planar_extremal(20), std::invalid_argument);
  for (std::int64_t N = 21; N <= 600; ++N) {
    const Graph g = build_planar_extremal(N);
    REQUIRE(g.edge_count() == N);
    REQUIRE(is_planar(g));
    REQUIRE(specialty(g) == planar_shelling_value(N));
    // Degree profile: nothing above 6, and the k-6 interior vertices of
    // the shelling sit at exactly 6.
    const int k = static_cast<int>(N / 3 + 2);
    const auto degs = degree_sequence(g).degrees;
    REQUIRE(degs.front() == 6);
    REQUIRE(std::count(degs.begin(), degs.end(), 6) == k - 6);
  }
}

TEST_CASE("icosahedron family") {
  const Graph i = build_icosahedron();
  CHECK(i.vertex_count() == 12);
  CHECK(i.edge_count() == 30);
  CHECK(is_planar(i));
  CHECK(specialty(i) == 150);
  CHECK(zagreb_irregularity(i) == 0);

  const Graph ip = build_i_prime();
  CHECK(ip.edge_count() == 32);
  CHECK(is_planar(ip));
  CHECK(specialty(ip) == 155);

  const Graph ipp = build_i_double_prime();
  CHECK(ipp.edge_count() == 31);
  CHECK(is_planar(ipp));
  CHECK(specialty(ipp) == 149);

  CHECK(build_extremal(Family::Planar, 30) == i);
  CHECK(build_extremal(Family::Planar, 31) == ipp);
  CHECK(build_extremal(Family::Planar, 32) == ip);
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(build_forest_extremal(50000), std::invalid_argument);
  CHECK_THROWS_AS(build_all_extremal(0), std::invalid_argument);
}

TEST_CASE("switching lemma examples") {
  const Graph c4 = named(4, {{'a', 'b'}, {'b', 'c'}, {'c', 'd'}, {'d', 'a'}});
  CHECK(hh_rewire(c4) == c4);

  const Graph p4 = named(4, {{'a', 'b'}, {'b', 'c'}, {'c', 'd'}});
  CHECK(hh_rewire(p4) == p4);

  const Graph g = named(5, {{'a', 'c'}, {'a', 'd'}, {'a', 'e'}, {'b', 'c'}, {'b', 'd'}});
  CHECK_FALSE(hh_conclusion_holds(g));
  const Graph h = hh_rewire(g);
  CHECK(h == named(5, {{'a', 'c'}, {'a', 'd'}, {'a', 'b'}, {'b', 'd'}, {'c', 'e'}}));
  CHECK(specialty(h) == 9);
  CHECK(specialty(g) == 9);
  CHECK(degree_sequence(h).degrees == degree_sequence(g).degrees);
  CHECK(hh_conclusion_holds(h));

  CHECK_THROWS_AS(hh_rewire(Graph::complete(4)), PreconditionError);
  CHECK_THROWS_AS(hh_rewire(Graph(1)), PreconditionError);
}

TEST_CASE("switching lemma on random inputs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const Graph g = oracle::random_hh_input(rng, 10);
    const Graph h = hh_rewire(g);
    REQUIRE(degree_sequence(h).degrees == degree_sequence(g).degrees);
    REQUIRE(specialty(h) >= specialty(g));
    REQUIRE(hh_conclusion_holds(h));
  }
}

}
