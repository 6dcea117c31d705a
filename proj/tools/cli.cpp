#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "extremal/constructions.hpp"
#include "extremal/explore.hpp"
#include "extremal/formulas.hpp"
#include "extremal/graph6.hpp"
#include "extremal/invariants.hpp"
#include "extremal/oracle.hpp"
#include "extremal/planarity.hpp"
#include "extremal/report.hpp"

namespace extremal::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Status { Ok, Mismatch, Unknown };

std::string_view to_string(Status s) {
  switch (s) {
  case Status::Ok:
    return "ok";
  case Status::Mismatch:
    return "mismatch";
  case Status::Unknown:
    return "unknown";
  }
  return "?";
}

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::array();
  Status status = Status::Ok;

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["status"] = to_string(status);
    return j;
  }

  int exit_code() const {
    return status == Status::Mismatch ? kMismatch : kOk;
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Family family_or_throw(const std::string &text) {
  if (auto f = parse_family(text))
    return *f;
  throw UsageError("unknown family '" + text +
                   "' (expected all, bipartite, forest or planar)");
}

void require_positive(long long N) {
  if (N < 1)
    throw UsageError("N must be >= 1, got " + std::to_string(N));
}

std::optional<long long> parse_int(std::string_view text) {
  long long v = 0;
  const char *end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end)
    return std::nullopt;
  return v;
}

// The witness and the value it must reach. Only planar N >= 21 has a
// construction on file; smaller planar N is an unsupported combination.
struct Target {
  Graph graph;
  ExtremalResult formula;
};

Target target_for(Family family, long long N) {
  if (family == Family::Planar && N < 21)
    throw UsageError("planar constructions are available for N >= 21, got " +
                     std::to_string(N));
  return {build_extremal(family, N), max_specialty(family, N)};
}

// ---- formula -------------------------------------------------------------

struct FormulaArgs {
  std::string family;
  long long N = 0;
  bool pretty = false;
};

int cmd_formula(const FormulaArgs &a, std::ostream &out) {
  const Family family = family_or_throw(a.family);
  require_positive(a.N);
  const ExtremalResult r = max_specialty(family, a.N);
  if (a.pretty) {
    out << to_string(family) << " N=" << a.N << ": ";
    if (r.exact)
      out << r.value;
    else
      out << "unknown (lower bound " << r.value << ")";
    out << "  [" << r.case_label << "]\n";
    return kOk;
  }
  RunReport report{"formula"};
  report.inputs["family"] = to_string(family);
  report.inputs["N"] = a.N;
  report.results.push_back(to_json(r));
  report.status = r.exact ? Status::Ok : Status::Unknown;
  out << report.to_json().dump() << '\n';
  return report.exit_code();
}

// ---- construct -----------------------------------------------------------

struct ConstructArgs {
  std::string family;
  long long N = 0;
  std::string format = "graph6";
};

int cmd_construct(const ConstructArgs &a, std::ostream &out,
                  std::ostream &err) {
  const Family family = family_or_throw(a.family);
  require_positive(a.N);
  const Target t = target_for(family, a.N);
  const std::int64_t s = specialty(t.graph);
  const bool ok = t.graph.edge_count() == a.N &&
                  in_family(t.graph, family) && s == t.formula.value;

  if (a.format == "graph6") {
    out << encode_graph6(t.graph) << '\n';
    err << "specialty " << s << '\n';
  } else if (a.format == "dot") {
    out << "// specialty " << s << '\n'
        << to_dot(t.graph, std::string(to_string(family)) + "_" +
                               std::to_string(a.N));
  } else {
    Json j;
    j["family"] = to_string(family);
    j["N"] = a.N;
    j["vertices"] = t.graph.vertex_count();
    j["edges"] = t.graph.edge_count();
    j["specialty"] = s;
    j["expected"] = t.formula.value;
    j["case"] = t.formula.case_label;
    j["graph6"] = encode_graph6(t.graph);
    out << j.dump() << '\n';
  }
  if (!ok) {
    err << "construction does not re-verify: specialty " << s
        << ", expected " << t.formula.value << '\n';
    return kMismatch;
  }
  return kOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string family;
  std::string range;
};

int cmd_verify(const VerifyArgs &a, std::ostream &out, std::ostream &err) {
  const Family family = family_or_throw(a.family);
  const auto range = parse_range(a.range);
  if (!range)
    throw UsageError("malformed range '" + a.range + "' (expected a..b or N)");
  require_positive(range->first);
  if (range->last < range->first)
    throw UsageError("empty range " + a.range);

  RunReport report{"verify"};
  report.inputs["family"] = to_string(family);
  report.inputs["range"] = {range->first, range->last};
  std::size_t failures = 0;
  for (long long N = range->first; N <= range->last; ++N) {
    Json e;
    e["N"] = N;
    try {
      const Target t = target_for(family, N);
      const std::int64_t s = specialty(t.graph);
      const bool member = in_family(t.graph, family);
      const bool ok =
          member && t.graph.edge_count() == N && s == t.formula.value;
      e["expected"] = t.formula.value;
      e["witness_specialty"] = s;
      e["edges"] = t.graph.edge_count();
      e["in_family"] = member;
      e["ok"] = ok;
      failures += ok ? 0 : 1;
    } catch (const std::exception &ex) {
      e["error"] = ex.what();
      e["ok"] = false;
      ++failures;
    }
    report.results.push_back(std::move(e));
  }
  report.status = failures ? Status::Mismatch : Status::Ok;
  out << report.to_json().dump() << '\n';
  err << "verified " << report.results.size() - failures << '/'
      << report.results.size() << '\n';
  return report.exit_code();
}

// ---- oracle --------------------------------------------------------------

struct OracleArgs {
  std::string family;
  long long N = 0;
  std::string cap = "independent";
  int jobs = 1;
  std::optional<std::uint64_t> ceiling;
};

std::uint64_t resolve_ceiling(const std::optional<std::uint64_t> &flag) {
  if (flag)
    return *flag;
  if (const char *env = std::getenv(kCeilingEnv); env && *env) {
    const auto v = parse_int(env);
    if (!v || *v < 0)
      throw UsageError(std::string(kCeilingEnv) + " is not a count: '" + env +
                       "'");
    return static_cast<std::uint64_t>(*v);
  }
  return OracleOptions{}.ceiling;
}

// Decodes a reported witness and checks it through the invariant and
// predicate modules, independently of the enumerator.
bool witness_ok(const CanonicalForm &w, const OracleReport &r) {
  try {
    const Graph g = decode_graph6(w.bytes);
    return g.edge_count() == r.N && in_family(g, r.family) &&
           specialty(g) == r.max_value;
  } catch (const Graph6Error &) {
    return false;
  }
}

int cmd_oracle(const OracleArgs &a, std::ostream &out, std::ostream &err) {
  const Family family = family_or_throw(a.family);
  require_positive(a.N);
  const auto mode = parse_cap_mode(a.cap);
  if (!mode)
    throw UsageError("unknown cap '" + a.cap + "' (expected independent or lemma)");
  if (*mode == CapMode::LemmaAssisted && family != Family::All)
    throw UsageError("the lemma cap applies to --family all only");
  if (a.jobs < 1)
    throw UsageError("--jobs must be >= 1");

  OracleOptions options;
  options.jobs = a.jobs;
  options.ceiling = resolve_ceiling(a.ceiling);

  OracleReport r;
  try {
    r = oracle_max(a.N, family, *mode, options);
  } catch (const EnumerationRefused &ex) {
    err << "refused: " << ex.what() << '\n';
    return kRefused;
  }
  const ExtremalResult formula = max_specialty(family, a.N);

  RunReport report{"oracle"};
  report.inputs["family"] = to_string(family);
  report.inputs["N"] = a.N;
  report.inputs["cap"] = to_string(*mode);
  // Timing and the worker count do not affect the result; they go to
  // stderr so that stdout is identical for any --jobs.
  report.results.push_back(to_json(r, false));
  report.results.push_back(to_json(formula));

  bool witnesses_ok = !r.witnesses.empty();
  for (const CanonicalForm &w : r.witnesses)
    witnesses_ok = witnesses_ok && witness_ok(w, r);
  if (!witnesses_ok)
    report.status = Status::Mismatch;
  else if (formula.exact)
    report.status = r.max_value == formula.value ? Status::Ok : Status::Mismatch;
  else
    // The stored value is a realised lower bound; falling short of it
    // would mean the enumeration missed a graph.
    report.status =
        r.max_value < formula.value ? Status::Mismatch : Status::Unknown;

  out << report.to_json().dump() << '\n';
  err << "oracle " << r.max_value << ", formula "
      << (formula.exact ? std::to_string(formula.value)
                        : "unknown (>= " + std::to_string(formula.value) + ")")
      << "; " << r.graphs_enumerated << " classes in " << r.elapsed.count()
      << " ms with " << a.jobs << " job(s)\n";
  return report.exit_code();
}

// ---- inspect -------------------------------------------------------------

int cmd_inspect(const std::string &path, std::ostream &out, std::ostream &err) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open " + path);
  bool parse_failed = false;
  bool identity_failed = false;
  std::string line;
  for (long long lineno = 1; std::getline(in, line); ++lineno) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.pop_back();
    if (line.empty())
      continue;
    Graph g;
    try {
      g = decode_graph6(line);
    } catch (const Graph6Error &ex) {
      err << path << ':' << lineno << ": " << ex.what() << '\n';
      parse_failed = true;
      continue;
    }
    const std::int64_t s = specialty(g);
    const std::int64_t m1 = zagreb_first(g);
    const std::int64_t m3 = zagreb_irregularity(g);
    const bool identity = 2 * s == m1 - m3;
    identity_failed = identity_failed || !identity;
    Json j;
    j["line"] = lineno;
    j["graph6"] = line;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["S"] = s;
    j["M1"] = m1;
    j["M3"] = m3;
    j["triangles"] = triangle_count(g);
    j["planar"] = is_planar(g);
    j["bipartite"] = is_bipartite(g);
    j["forest"] = is_forest(g);
    j["zagreb_identity"] = identity;
    out << j.dump() << '\n';
  }
  if (parse_failed)
    return kUsage;
  return identity_failed ? kMismatch : kOk;
}

// ---- explore -------------------------------------------------------------

struct ExploreArgs {
  long long N = 0;
  std::uint64_t budget = 50'000;
  std::uint64_t seed = 1;
};

int cmd_explore(const ExploreArgs &a, std::ostream &out, std::ostream &err) {
  if (a.N < 10 || a.N > 32)
    throw UsageError("explore covers the open planar range 10..32, got " +
                     std::to_string(a.N));
  const ExploreResult r = explore_planar(a.N, a.budget, a.seed);
  RunReport report{"explore"};
  report.inputs["N"] = a.N;
  report.inputs["budget"] = a.budget;
  report.inputs["seed"] = a.seed;
  report.results.push_back(to_json(r));
  report.status = Status::Unknown;
  out << report.to_json().dump() << '\n';
  err << "N=" << a.N << ": " << r.value << " lower bound (open question)\n";
  return kOk;
}

} // namespace

std::optional<Range> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_int(text);
    if (!v)
      return std::nullopt;
    return Range{*v, *v};
  }
  const auto a = parse_int(text.substr(0, dots));
  const auto b = parse_int(text.substr(dots + 2));
  if (!a || !b)
    return std::nullopt;
  return Range{*a, *b};
}

int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Maximum specialty of graphs with a fixed number of edges"};
  app.require_subcommand(1);

  FormulaArgs fa;
  auto *formula = app.add_subcommand("formula", "closed-form maximum");
  formula->add_option("--family", fa.family, "all|bipartite|forest|planar")
      ->required();
  formula->add_option("N", fa.N, "edge count")->required();
  formula->add_flag("--pretty", fa.pretty, "human-readable line instead of JSON");

  ConstructArgs ca;
  auto *construct = app.add_subcommand("construct", "emit an extremal witness");
  construct->add_option("--family", ca.family)->required();
  construct->add_option("N", ca.N)->required();
  construct->add_option("--format", ca.format)
      ->check(CLI::IsMember({"graph6", "dot", "json"}));

  VerifyArgs va;
  auto *verify = app.add_subcommand("verify", "check witnesses against the formula");
  verify->add_option("--family", va.family)->required();
  verify->add_option("range", va.range, "a..b or N")->required();

  OracleArgs oa;
  auto *oracle = app.add_subcommand("oracle", "exhaustive maximum vs formula");
  oracle->add_option("--family", oa.family)->required();
  oracle->add_option("N", oa.N)->required();
  oracle->add_option("--cap", oa.cap, "independent|lemma");
  oracle->add_option("--jobs", oa.jobs);
  oracle->add_option("--ceiling", oa.ceiling,
                     std::string("class-count ceiling (overrides ") +
                         kCeilingEnv + ")");

  std::string inspect_path;
  auto *inspect = app.add_subcommand("inspect", "invariants of graph6 lines");
  inspect->add_option("path", inspect_path)->required();

  ExploreArgs ea;
  auto *explore = app.add_subcommand("explore", "planar local search, N in 10..32");
  explore->add_option("N", ea.N)->required();
  explore->add_option("--budget", ea.budget);
  explore->add_option("--seed", ea.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (formula->parsed())
      return cmd_formula(fa, out);
    if (construct->parsed())
      return cmd_construct(ca, out, err);
    if (verify->parsed())
      return cmd_verify(va, out, err);
    if (oracle->parsed())
      return cmd_oracle(oa, out, err);
    if (inspect->parsed())
      return cmd_inspect(inspect_path, out, err);
    if (explore->parsed())
      return cmd_explore(ea, out, err);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace extremal::cli
