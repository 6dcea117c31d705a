#include <doctest.h>

#include <map>
#include <set>

#include "extremal/canonical.hpp"
#include "extremal/constructions.hpp"
#include "extremal/enumerate.hpp"
#include "extremal/explore.hpp"
#include "extremal/formulas.hpp"
#include "extremal/graph6.hpp"
#include "extremal/invariants.hpp"
#include "extremal/oracle.hpp"
#include "extremal/planarity.hpp"
#include "extremal/report.hpp"
#include "support/oracles.hpp"

using namespace extremal;

namespace {

bool contains(const OracleReport &r, const Graph &g) {
  const CanonicalForm f = canonical_form(g);
  return std::find(r.witnesses.begin(), r.witnesses.end(), f) != r.witnesses.end();
}

Graph path(int vertices) {
  Graph g(vertices);
  for (int v = 0; v + 1 < vertices; ++v)
    g.add_edge(v, v + 1);
  return g;
}

void check_witnesses(const OracleReport &r) {
  REQUIRE_FALSE(r.witnesses.empty());
  for (const CanonicalForm &w : r.witnesses) {
    const Graph g = decode_graph6(w.bytes);
    REQUIRE(g.edge_count() == r.N);
    REQUIRE(in_family(g, r.family));
    REQUIRE(specialty(g) == r.max_value);
    REQUIRE(g.vertex_count() <= r.vertex_cap);
  }
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("class counts for tiny edge counts") {
  CHECK(enumerate_graphs(3, Family::All, 6).size() == 5);
  CHECK(enumerate_graphs(2, Family::All, 4).size() == 2);
  CHECK(enumerate_graphs(3, Family::Forest, 6).size() == 4);
  // Graphs without isolated vertices by edge count.
  const std::vector<std::size_t> expected = {1, 2, 5, 11, 26, 68, 177, 497};
  for (int N = 1; N <= 8; ++N)
    CHECK(enumerate_graphs(N, Family::All, 2 * N).size() ==
          expected[static_cast<std::size_t>(N - 1)]);
}

TEST_CASE("enumeration matches a generate-and-filter baseline on six vertices") {
  // Every labelled graph on 6 vertices, isolated vertices dropped, grouped
  // by edge count and reduced to classes by brute-force canonical forms.
  std::map<int, std::set<std::string>> naive;
  for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
    Graph g(6);
    int bit = 0;
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v, ++bit)
        if (mask >> bit & 1)
          g.add_edge(u, v);
    const Graph h = g.without_isolated_vertices();
    naive[h.edge_count()].insert(oracle::brute_canonical(h));
  }
  std::map<int, std::set<std::string>> ours;
  std::size_t visits = 0;
  for_each_class({15, 6, Family::All}, [&](const Graph &g) {
    ours[g.edge_count()].insert(oracle::brute_canonical(g));
    ++visits;
  });
  CHECK(ours == naive);
  std::size_t total = 0;
  for (const auto &[edges, classes] : naive)
    total += classes.size();
  // No class visited twice.
  CHECK(visits == total);
}

TEST_CASE("family-restricted enumeration matches filtering") {
  for (Family f : {Family::Bipartite, Family::Forest, Family::Planar})
    for (int N = 1; N <= 6; ++N) {
      std::set<std::string> filtered;
      for (const Graph &g : enumerate_graphs(N, Family::All, 2 * N))
        if (in_family(g, f))
          filtered.insert(canonical_form(g).bytes);
      std::set<std::string> direct;
      for (const Graph &g : enumerate_graphs(N, f, 2 * N))
        direct.insert(canonical_form(g).bytes);
      CHECK(direct == filtered);
    }
}

TEST_CASE("oracle examples") {
  const OracleReport all7 = oracle_max(7, Family::All, CapMode::Independent);
  CHECK(all7.max_value == 19);
  CHECK(all7.vertex_cap == 14);
  check_witnesses(all7);

  const OracleReport bip4 = oracle_max(4, Family::Bipartite, CapMode::Independent);
  CHECK(bip4.max_value == 8);
  Graph c4 = path(4);
  c4.add_edge(0, 3);
  CHECK(contains(bip4, c4));
  check_witnesses(bip4);

  const OracleReport forest5 = oracle_max(5, Family::Forest, CapMode::Independent);
  CHECK(forest5.max_value == 8);
  CHECK(contains(forest5, path(6)));
  check_witnesses(forest5);

  const OracleReport bip7 = oracle_max(7, Family::Bipartite, CapMode::Independent);
  CHECK(bip7.max_value == 15);
  CHECK(contains(bip7, build_bipartite_extremal(7)));
}

TEST_CASE("oracle agrees with the closed forms on small N") {
  for (int N = 1; N <= 6; ++N) {
    CHECK(oracle_max(N, Family::All, CapMode::Independent).max_value ==
          max_specialty_all(N).value);
    CHECK(oracle_max(N, Family::Bipartite, CapMode::Independent).max_value ==
          max_specialty_bipartite(N).value);
    CHECK(oracle_max(N, Family::Forest, CapMode::Independent).max_value ==
          max_specialty_forest(N).value);
    CHECK(oracle_max(N, Family::Planar, CapMode::Independent).max_value ==
          max_specialty_planar(N).value);
  }
}

TEST_CASE("lemma cap agrees with the independent cap") {
  for (int N = 1; N <= 7; ++N) {
    const OracleReport a = oracle_max(N, Family::All, CapMode::Independent);
    const OracleReport b = oracle_max(N, Family::All, CapMode::LemmaAssisted);
    CHECK(a.max_value == b.max_value);
    check_witnesses(b);
    // Lemma witnesses are the n+1 vertex maximizers, a subset of all.
    for (const CanonicalForm &w : b.witnesses)
      CHECK(std::find(a.witnesses.begin(), a.witnesses.end(), w) != a.witnesses.end());
  }
  const OracleReport k6 = oracle_max(15, Family::All, CapMode::LemmaAssisted);
  CHECK(k6.max_value == 75);
  CHECK(k6.witnesses.size() == 1);
  CHECK(contains(k6, Graph::complete(6)));
  CHECK(oracle_max(24, Family::All, CapMode::LemmaAssisted).max_value == 144);
}

TEST_CASE("lemma cap is limited to the unrestricted family") {
  CHECK_THROWS_AS(oracle_max(5, Family::Bipartite, CapMode::LemmaAssisted),
                  std::invalid_argument);
  CHECK(parse_cap_mode("lemma") == CapMode::LemmaAssisted);
  CHECK(parse_cap_mode("independent") == CapMode::Independent);
  CHECK_FALSE(parse_cap_mode("loose"));
}

TEST_CASE("refusal above the ceiling") {
  OracleOptions tight;
  tight.ceiling = 100;
  CHECK_THROWS_AS(oracle_max(8, Family::All, CapMode::Independent, tight),
                  EnumerationRefused);
  CHECK_THROWS_AS(oracle_max(40, Family::All, CapMode::Independent),
                  EnumerationRefused);
  CHECK(estimated_oracle_classes(21, CapMode::LemmaAssisted) <
        estimated_oracle_classes(21, CapMode::Independent));
  CHECK(estimated_classes(3) == 1 + 1 + 2 + 5);
}

TEST_CASE("reports do not depend on the worker count") {
  for (Family f : {Family::All, Family::Bipartite, Family::Forest, Family::Planar}) {
    std::string first;
    for (int jobs : {1, 2, 8}) {
      OracleOptions o;
      o.jobs = jobs;
      const std::string dump =
          to_json(oracle_max(6, f, CapMode::Independent, o), false).dump();
      if (first.empty())
        first = dump;
      CHECK(dump == first);
    }
  }
  CHECK(enumerate_graphs(6, Family::All, 12, 1) ==
        enumerate_graphs(6, Family::All, 12, 3));
}

TEST_CASE("report serialization") {
  const OracleReport r = oracle_max(3, Family::All, CapMode::Independent);
  const auto j = to_json(r);
  CHECK(j["family"] == "all");
  CHECK(j["max_value"] == 6);
  CHECK(j["witnesses"].size() == 1);
  CHECK(j["witnesses"][0] == canonical_form(Graph::complete(3)).bytes);
  CHECK(j.contains("elapsed_ms"));
  CHECK_FALSE(to_json(r, false).contains("elapsed_ms"));

  const auto f = to_json(max_specialty_planar(20));
  CHECK(f["value"] == "unknown");
  CHECK(f["lower_bound"].is_number());
  CHECK(f["exact"] == false);
}

TEST_CASE("explorer") {
  const ExploreResult a = explore_planar(30, 3000, 9);
  CHECK(a.value >= 150);
  CHECK(a.best.edge_count() == 30);
  CHECK(is_planar(a.best));
  CHECK(specialty(a.best) == a.value);

  const ExploreResult b = explore_planar(30, 3000, 9);
  CHECK(b.value == a.value);
  CHECK(b.best == a.best);
  CHECK(b.origin == a.origin);

  CHECK(explore_planar(31, 500, 1).value >= 149);
  CHECK(explore_planar(32, 500, 1).value >= 155);

  const ExploreResult small = explore_planar(12, 2000, 4);
  CHECK(small.best.edge_count() == 12);
  CHECK(is_planar(small.best));
  // The unrestricted maximum bounds every planar value.
  CHECK(small.value <= max_specialty_all(12).value);

  CHECK_THROWS_AS(explore_planar(9, 10, 1), std::out_of_range);
  CHECK_THROWS_AS(explore_planar(33, 10, 1), std::out_of_range);
}

}
