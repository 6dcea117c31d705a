#include "extremal/oracle.hpp"

#include <algorithm>
#include <limits>

#include "extremal/enumerate.hpp"
#include "extremal/graph6.hpp"
#include "extremal/invariants.hpp"

namespace extremal {

namespace {

struct PartResult {
  std::int64_t max_value = -1;
  std::vector<CanonicalForm> witnesses;
  std::uint64_t count = 0;

  void offer(std::int64_t value, CanonicalForm form) {
    ++count;
    if (value > max_value) {
      max_value = value;
      witnesses.clear();
    }
    if (value == max_value)
      witnesses.push_back(std::move(form));
  }
};

void merge_into(OracleReport &report, const std::vector<PartResult> &parts) {
  report.max_value = -1;
  for (const PartResult &p : parts) {
    report.graphs_enumerated += p.count;
    report.max_value = std::max(report.max_value, p.max_value);
  }
  for (const PartResult &p : parts)
    if (p.max_value == report.max_value)
      report.witnesses.insert(report.witnesses.end(), p.witnesses.begin(),
                              p.witnesses.end());
  std::sort(report.witnesses.begin(), report.witnesses.end());
  report.witnesses.erase(
      std::unique(report.witnesses.begin(), report.witnesses.end()),
      report.witnesses.end());
  if (report.graphs_enumerated == 0)
    report.max_value = 0;
}

} // namespace

std::string_view to_string(CapMode mode) {
  return mode == CapMode::Independent ? "independent" : "lemma";
}

std::optional<CapMode> parse_cap_mode(std::string_view text) {
  if (text == "independent")
    return CapMode::Independent;
  if (text == "lemma" || text == "lemma-assisted")
    return CapMode::LemmaAssisted;
  return std::nullopt;
}

int oracle_vertex_cap(std::int64_t N, CapMode mode) {
  if (N < 1)
    throw std::invalid_argument("edge count must be >= 1");
  const std::int64_t cap =
      mode == CapMode::Independent ? 2 * N : decompose_triangular(N).n + 1;
  return static_cast<int>(std::min<std::int64_t>(cap, 1 << 20));
}

std::uint64_t estimated_oracle_classes(std::int64_t N, CapMode mode) {
  if (N < 1)
    throw std::invalid_argument("edge count must be >= 1");
  std::int64_t edges = N;
  if (mode == CapMode::LemmaAssisted) {
    const TriangularDecomposition d = decompose_triangular(N);
    edges = d.n - d.m;
  }
  if (edges > 1000)
    return std::numeric_limits<std::uint64_t>::max();
  return estimated_classes(static_cast<int>(edges));
}

OracleReport oracle_max(std::int64_t N, Family family, CapMode mode,
                        const OracleOptions &options) {
  if (mode == CapMode::LemmaAssisted && family != Family::All)
    throw std::invalid_argument(
        "the lemma-assisted vertex cap is only valid for the unrestricted "
        "family");
  const std::uint64_t estimate = estimated_oracle_classes(N, mode);
  if (estimate > options.ceiling)
    throw EnumerationRefused(
        "estimated " + std::to_string(estimate) +
        " classes exceeds the enumeration ceiling of " +
        std::to_string(options.ceiling));

  const auto start = std::chrono::steady_clock::now();
  OracleReport report;
  report.family = family;
  report.N = N;
  report.cap_mode = mode;
  report.vertex_cap = oracle_vertex_cap(N, mode);

  if (mode == CapMode::Independent) {
    const PartitionedSearch search(
        {static_cast<int>(N), report.vertex_cap, family});
    std::vector<PartResult> parts(search.part_count());
    // Enumerated graphs are already canonically labeled.
    search.run_parallel(options.jobs, [&](std::size_t i, const Graph &g) {
      parts[i].offer(specialty(g), CanonicalForm{encode_graph6(g)});
    });
    merge_into(report, parts);
  } else {
    const TriangularDecomposition d = decompose_triangular(N);
    const int missing = static_cast<int>(d.n - d.m);
    const int vertices = report.vertex_cap;
    auto evaluate = [&](PartResult &part, const Graph &complement_part) {
      const Graph g = complement_part.padded_to(vertices).complement();
      part.offer(specialty(g), canonical_form(g.without_isolated_vertices()));
    };
    std::vector<PartResult> parts;
    if (missing == 0) {
      parts.resize(1);
      evaluate(parts[0], Graph(0));
    } else {
      const PartitionedSearch search({missing, vertices, Family::All});
      parts.resize(search.part_count());
      search.run_parallel(options.jobs, [&](std::size_t i, const Graph &g) {
        evaluate(parts[i], g);
      });
    }
    merge_into(report, parts);
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

} // namespace extremal
