#include <doctest.h>

#include <limits>
#include <random>

#include "extremal/constructions.hpp"
#include "extremal/formulas.hpp"
#include "extremal/invariants.hpp"
#include "extremal/planarity.hpp"

using namespace extremal;

namespace {

std::int64_t F(std::int64_t N) { return N == 0 ? 0 : max_specialty_all(N).value; }

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

} // namespace

TEST_SUITE("formulas") {

TEST_CASE("triangular decomposition") {
  auto d = decompose_triangular(2017);
  CHECK(d.n == 64);
  CHECK(d.m == 1);
  d = decompose_triangular(1);
  CHECK(d.n == 1);
  CHECK(d.m == 1);
  d = decompose_triangular(10);
  CHECK(d.n == 4);
  CHECK(d.m == 4);
  CHECK_THROWS_AS(decompose_triangular(0), std::invalid_argument);
  CHECK_THROWS_AS(decompose_triangular(-5), std::invalid_argument);

  for (std::int64_t N = 1; N <= 100000; ++N) {
    d = decompose_triangular(N);
    REQUIRE(choose2(d.n) + d.m == N);
    REQUIRE(d.m >= 1);
    REQUIRE(d.m <= d.n);
  }
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  d = decompose_triangular(big);
  CHECK(d.m >= 1);
  CHECK(d.m <= d.n);
  CHECK(static_cast<__int128>(d.n) * (d.n - 1) / 2 + d.m == big);
}

TEST_CASE("square decomposition") {
  auto d = decompose_square(40);
  CHECK(d.n == 6);
  CHECK(d.m == 4);
  d = decompose_square(45);
  CHECK(d.n == 6);
  CHECK(d.m == 9);
  d = decompose_square(1);
  CHECK(d.n == 0);
  CHECK(d.m == 1);
  for (std::int64_t N = 1; N <= 100000; ++N) {
    d = decompose_square(N);
    REQUIRE(d.n * d.n + d.m == N);
    REQUIRE(d.m >= 1);
    REQUIRE(d.m <= 2 * d.n + 1);
  }
}

TEST_CASE("unrestricted maximum examples") {
  CHECK(max_specialty_all(30).value == 201);
  CHECK(max_specialty_all(30).case_label == "all.case-i");
  CHECK(max_specialty_all(31).value == 211);
  CHECK(max_specialty_all(31).case_label == "all.case-ii");
  CHECK(max_specialty_all(32).value == 224);
  CHECK(max_specialty_all(32).case_label == "all.case-iii");
  CHECK(max_specialty_all(3).value == 6);
  CHECK(max_specialty_all(3).case_label == "all.case-iii");
  CHECK(max_specialty_all(2017).value == 127009);
  CHECK(max_specialty_all(1).value == 1);
  CHECK(max_specialty_all(2).value == 2);
  CHECK(max_specialty_all(7).value == 19);
  CHECK_THROWS_AS(max_specialty_all(0), std::invalid_argument);
  // Near the top of int64 the value overflows and must say so.
  CHECK_THROWS_AS(max_specialty_all(std::numeric_limits<std::int64_t>::max()),
                  std::overflow_error);
}

TEST_CASE("non-universal maximum examples") {
  CHECK(c_value(12) == 48);
  CHECK(c_value(31) == 211);
  CHECK_THROWS_AS(c_value(32), UndefinedRangeError);
}

TEST_CASE("bipartite maximum examples") {
  CHECK(max_specialty_bipartite(40).value == 232);
  CHECK(max_specialty_bipartite(7).value == 15);
  CHECK(max_specialty_bipartite(1).value == 1);
  CHECK(max_specialty_bipartite(4).value == 8);
  CHECK(max_specialty_bipartite(45).value == 279);
}

TEST_CASE("forest maximum examples") {
  CHECK(max_specialty_forest(1).value == 1);
  CHECK(max_specialty_forest(2).value == 2);
  CHECK(max_specialty_forest(5).value == 8);
  CHECK(max_specialty_forest(100).value == 198);
}

TEST_CASE("planar maximum examples") {
  CHECK(max_specialty_planar(33).value == 162);
  CHECK(max_specialty_planar(30).value == 150);
  CHECK(max_specialty_planar(34).value == 166);
  for (std::int64_t N = 1; N <= 9; ++N) {
    CHECK(max_specialty_planar(N).exact);
    CHECK(max_specialty_planar(N).value == F(N));
  }
  for (std::int64_t N : {10, 20, 29, 31, 32}) {
    const ExtremalResult r = max_specialty_planar(N);
    CHECK_FALSE(r.exact);
    CHECK(r.case_label == "planar.unknown");
    REQUIRE(r.witness);
    CHECK(r.witness->edge_count() == N);
    CHECK(is_planar(*r.witness));
    CHECK(specialty(*r.witness) == r.value);
  }
  CHECK(max_specialty_planar(31).value >= 149);
  CHECK(max_specialty_planar(32).value >= 155);
}

TEST_CASE("dispatch and family names") {
  for (Family f : {Family::All, Family::Bipartite, Family::Forest, Family::Planar}) {
    CHECK(parse_family(to_string(f)) == f);
    CHECK(max_specialty(f, 50).family == f);
  }
  CHECK_FALSE(parse_family("tree"));
}

TEST_CASE("monotonicity") {
  for (std::int64_t N = 1; N < 100000; ++N)
    REQUIRE(F(N) < F(N + 1));
  for (std::int64_t N = 1; N < 10000; ++N) {
    REQUIRE(max_specialty_bipartite(N).value < max_specialty_bipartite(N + 1).value);
    REQUIRE(max_specialty_forest(N).value < max_specialty_forest(N + 1).value);
  }
}

TEST_CASE("triangular edge counts give the complete graph value") {
  for (std::int64_t n = 1; n <= 300; ++n)
    REQUIRE(F(choose2(n + 1)) == n * choose2(n + 1));
}

TEST_CASE("inductive maximum recurrence") {
  for (std::int64_t N = 1; N <= 10000; ++N) {
    const auto d = decompose_triangular(N);
    const std::int64_t with_universal = F(N - d.n) + 3 * N - 2 * d.n;
    if (2 * d.m <= d.n - 1) {
      REQUIRE(F(N) == std::max(with_universal, c_value(N)));
    } else {
      // Above half, C(N) is undefined and the universal branch is exact.
      REQUIRE(F(N) == with_universal);
      REQUIRE_THROWS_AS(c_value(N), UndefinedRangeError);
    }
  }
}

TEST_CASE("non-universal recurrence inequality") {
  for (std::int64_t N = 1; N <= 10000; ++N) {
    const auto d = decompose_triangular(N);
    if (2 * d.m >= d.n - 1)
      continue;
    const std::int64_t rhs =
        (d.n - 1) * (3 * d.n - 4) / 2 - d.m + c_value(N - (d.n - 1));
    REQUIRE(c_value(N) <= rhs);
  }
}

TEST_CASE("case formulas agree at their boundaries") {
  // Where two case conditions meet, the neighbouring formulas must give
  // the same or a smaller value than the selected one.
  for (std::int64_t n = 2; n <= 1000; ++n)
    for (std::int64_t m = 1; m <= n; ++m) {
      const std::int64_t base = (n - 1) * choose2(n);
      const std::int64_t one = base + m * (3 * m - 1) / 2;
      const std::int64_t two = base + m * (4 * m - n + 1);
      const std::int64_t three = n * choose2(n) + m * (2 * m - n);
      const std::int64_t v = F(choose2(n) + m);
      if (5 * m <= 2 * n - 3)
        REQUIRE((v == one && one >= two));
      else if (2 * m <= n - 1)
        REQUIRE((v == two && two >= one));
      else
        REQUIRE(v == three);
    }
}

TEST_CASE("every n+1 vertex graph above half has a universal vertex") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 14)(rng);
    const int m = std::uniform_int_distribution<int>((n + 1) / 2, n)(rng);
    if (2 * m <= n - 1)
      continue;
    // Random graph on n+1 vertices with C(n,2)+m edges: K_{n+1} minus
    // n-m random edges.
    Graph g = Graph::complete(n + 1);
    std::vector<Edge> edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (int i = 0; i < n - m; ++i)
      g.remove_edge(edges[static_cast<std::size_t>(i)].u,
                    edges[static_cast<std::size_t>(i)].v);
    REQUIRE(has_universal_vertex(g));
  }
}

TEST_CASE("planar shelling value") {
  CHECK(planar_shelling_value(21) == 90);
  CHECK(planar_shelling_value(42) == 216);
  CHECK_THROWS_AS(planar_shelling_value(20), UndefinedRangeError);
}

}
