#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "extremal/canonical.hpp"
#include "extremal/formulas.hpp"

namespace extremal {

// Independent: at most 2N vertices, enough for any N-edge graph without
//   isolated vertices.
// LemmaAssisted: at most n+1 vertices where N = C(n,2)+m; sound only for
//   the unrestricted family, where an n+1 vertex maximizer always exists.
enum class CapMode { Independent, LemmaAssisted };

std::string_view to_string(CapMode mode);
std::optional<CapMode> parse_cap_mode(std::string_view text);

struct OracleReport {
  Family family = Family::All;
  std::int64_t N = 0;
  CapMode cap_mode = CapMode::Independent;
  int vertex_cap = 0;
  std::int64_t max_value = 0;
  // Canonical forms of every maximizing class (isolated vertices removed),
  // sorted.
  std::vector<CanonicalForm> witnesses;
  std::uint64_t graphs_enumerated = 0;
  std::chrono::milliseconds elapsed{0};
};

class EnumerationRefused : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  int jobs = 1;
  // Refuse when the estimated number of visited classes exceeds this.
  std::uint64_t ceiling = 2'000'000;
};

int oracle_vertex_cap(std::int64_t N, CapMode mode);
std::uint64_t estimated_oracle_classes(std::int64_t N, CapMode mode);

// Exhaustive maximum of the specialty over N-edge graphs of the family.
// With LemmaAssisted the graphs on exactly n+1 vertices are generated as
// complements of their (n-m)-edge complements, which is the same set of
// classes reached far more cheaply.
OracleReport oracle_max(std::int64_t N, Family family, CapMode mode,
                        const OracleOptions &options = {});

} // namespace extremal
