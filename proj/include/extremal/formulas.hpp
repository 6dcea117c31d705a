#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "extremal/graph.hpp"

namespace extremal {

enum class Family { All, Bipartite, Forest, Planar };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view text);

// Membership test for a family.
bool in_family(const Graph &g, Family family);

// N = C(n,2) + m with 1 <= m <= n.
struct TriangularDecomposition {
  std::int64_t N;
  std::int64_t n;
  std::int64_t m;
};

// N = n^2 + m with 1 <= m <= 2n + 1.
struct SquareDecomposition {
  std::int64_t N;
  std::int64_t n;
  std::int64_t m;
};

// Which of the three extremal shapes is optimal over all graphs. The
// thresholds (2n-3)/5 and (n-1)/2 are compared in integers; on the shared
// boundary 5m = 2n-3 the first shape is reported.
enum class AllCase { CliquePlusApex, NearCliqueNoUniversal, CompleteMinusMatching };

struct ExtremalResult {
  Family family = Family::All;
  std::int64_t N = 0;
  // The exact maximum when `exact`, otherwise the best known lower bound.
  std::int64_t value = 0;
  std::string case_label;
  bool exact = true;
  std::optional<Graph> witness;
};

// Thrown when a closed form is queried outside the range where it is
// defined (for example C(N) when every graph on n+1 vertices has a
// universal vertex).
class UndefinedRangeError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

TriangularDecomposition decompose_triangular(std::int64_t N);
SquareDecomposition decompose_square(std::int64_t N);
AllCase classify_all(const TriangularDecomposition &d);

ExtremalResult max_specialty_all(std::int64_t N);
ExtremalResult max_specialty_bipartite(std::int64_t N);
ExtremalResult max_specialty_forest(std::int64_t N);
// Exact for N <= 9, N = 30 and N >= 33. Everywhere else `exact` is false
// and `value`/`witness` carry the best planar construction on file.
ExtremalResult max_specialty_planar(std::int64_t N);
ExtremalResult max_specialty(Family family, std::int64_t N);

// Maximum over graphs with N edges, n+1 vertices and no universal vertex.
// Defined only for 1 <= m <= (n-1)/2.
std::int64_t c_value(std::int64_t N);

// Closed form of the planar shelling construction (N >= 21).
std::int64_t planar_shelling_value(std::int64_t N);

} // namespace extremal
