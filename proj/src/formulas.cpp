#include "extremal/formulas.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "extremal/constructions.hpp"
#include "extremal/invariants.hpp"
#include "extremal/planarity.hpp"

namespace extremal {

namespace {

// Wide enough that no intermediate below overflows for any int64 N:
// n < 2^33, so n^3 < 2^99.
using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v < 0 || v > static_cast<Wide>(std::numeric_limits<std::int64_t>::max()))
    throw std::overflow_error("value does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

Wide choose2(Wide n) { return n * (n - 1) / 2; }

void require_positive(std::int64_t N) {
  if (N < 1)
    throw std::invalid_argument("edge count must be >= 1, got " +
                                std::to_string(N));
}

} // namespace

std::string_view to_string(Family family) {
  switch (family) {
  case Family::All:
    return "all";
  case Family::Bipartite:
    return "bipartite";
  case Family::Forest:
    return "forest";
  case Family::Planar:
    return "planar";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  for (Family f : {Family::All, Family::Bipartite, Family::Forest,
                   Family::Planar})
    if (text == to_string(f))
      return f;
  return std::nullopt;
}

bool in_family(const Graph &g, Family family) {
  switch (family) {
  case Family::All:
    return true;
  case Family::Bipartite:
    return is_bipartite(g);
  case Family::Forest:
    return is_forest(g);
  case Family::Planar:
    return is_planar(g);
  }
  return false;
}

TriangularDecomposition decompose_triangular(std::int64_t N) {
  require_positive(N);
  // Largest n with C(n,2) < N.
  auto n = static_cast<Wide>(
      std::floor((1.0 + std::sqrt(8.0 * static_cast<double>(N))) / 2.0));
  while (n > 1 && choose2(n) >= N)
    --n;
  while (choose2(n + 1) < N)
    ++n;
  return {N, narrow(n), narrow(N - choose2(n))};
}

SquareDecomposition decompose_square(std::int64_t N) {
  require_positive(N);
  // Largest n with n^2 < N.
  auto n = static_cast<Wide>(std::floor(std::sqrt(static_cast<double>(N))));
  while (n > 0 && n * n >= N)
    --n;
  while ((n + 1) * (n + 1) < N)
    ++n;
  return {N, narrow(n), narrow(N - n * n)};
}

AllCase classify_all(const TriangularDecomposition &d) {
  if (5 * d.m <= 2 * d.n - 3)
    return AllCase::CliquePlusApex;
  if (2 * d.m <= d.n - 1)
    return AllCase::NearCliqueNoUniversal;
  return AllCase::CompleteMinusMatching;
}

ExtremalResult max_specialty_all(std::int64_t N) {
  const TriangularDecomposition d = decompose_triangular(N);
  const Wide n = d.n;
  const Wide m = d.m;
  ExtremalResult r;
  r.family = Family::All;
  r.N = N;
  switch (classify_all(d)) {
  case AllCase::CliquePlusApex:
    r.value = narrow((n - 1) * choose2(n) + m * (3 * m - 1) / 2);
    r.case_label = "all.case-i";
    break;
  case AllCase::NearCliqueNoUniversal:
    r.value = narrow((n - 1) * choose2(n) + m * (4 * m - n + 1));
    r.case_label = "all.case-ii";
    break;
  case AllCase::CompleteMinusMatching:
    r.value = narrow(n * choose2(n) + m * (2 * m - n));
    r.case_label = "all.case-iii";
    break;
  }
  return r;
}

std::int64_t c_value(std::int64_t N) {
  const TriangularDecomposition d = decompose_triangular(N);
  if (2 * d.m > d.n - 1)
    throw UndefinedRangeError(
        "C(N) undefined for N=" + std::to_string(N) + " (n=" +
        std::to_string(d.n) + ", m=" + std::to_string(d.m) +
        "): every graph on n+1 vertices with N edges has a universal vertex");
  const Wide n = d.n;
  const Wide m = d.m;
  return narrow((n - 1) * choose2(n) + m * (4 * m - n + 1));
}

ExtremalResult max_specialty_bipartite(std::int64_t N) {
  const SquareDecomposition d = decompose_square(N);
  const Wide n = d.n;
  const Wide m = d.m;
  ExtremalResult r;
  r.family = Family::Bipartite;
  r.N = N;
  if (m <= n) {
    r.value = narrow(n * n * n + m * m);
    r.case_label = "bipartite.case-i";
  } else {
    r.value = narrow(n * n * n + n * n + m * (m - n));
    r.case_label = "bipartite.case-ii";
  }
  return r;
}

ExtremalResult max_specialty_forest(std::int64_t N) {
  require_positive(N);
  ExtremalResult r;
  r.family = Family::Forest;
  r.N = N;
  if (N == 1) {
    r.value = 1;
    r.case_label = "forest.single-edge";
  } else {
    r.value = narrow(Wide{2} * N - 2);
    r.case_label = "forest.path";
  }
  return r;
}

std::int64_t planar_shelling_value(std::int64_t N) {
  if (N < 21)
    throw UndefinedRangeError("shelling closed form needs N >= 21");
  return narrow(Wide{6} * N - (N % 3 == 0 ? 36 : 38));
}

ExtremalResult max_specialty_planar(std::int64_t N) {
  require_positive(N);
  ExtremalResult r;
  r.family = Family::Planar;
  r.N = N;
  if (N <= 9) {
    // The unrestricted extremal graphs are all planar at this size.
    r.value = max_specialty_all(N).value;
    r.case_label = "planar.small";
    return r;
  }
  if (N == 30) {
    r.value = 150;
    r.case_label = "planar.icosahedron";
    return r;
  }
  if (N >= 33) {
    r.value = planar_shelling_value(N);
    r.case_label = "planar.shelling";
    return r;
  }

  // Open range: report the best construction on file as a lower bound.
  std::vector<Graph> candidates;
  candidates.push_back(build_planar_shelling(N));
  if (N == 31)
    candidates.push_back(build_i_double_prime());
  if (N == 32)
    candidates.push_back(build_i_prime());
  if (Graph g = build_all_extremal(N); is_planar(g))
    candidates.push_back(std::move(g));

  r.exact = false;
  r.case_label = "planar.unknown";
  r.value = -1;
  for (Graph &g : candidates) {
    const std::int64_t s = specialty(g);
    if (s > r.value) {
      r.value = s;
      r.witness = std::move(g);
    }
  }
  return r;
}

ExtremalResult max_specialty(Family family, std::int64_t N) {
  switch (family) {
  case Family::All:
    return max_specialty_all(N);
  case Family::Bipartite:
    return max_specialty_bipartite(N);
  case Family::Forest:
    return max_specialty_forest(N);
  case Family::Planar:
    return max_specialty_planar(N);
  }
  throw std::invalid_argument("unknown family");
}

} // namespace extremal
