#include "extremal/report.hpp"

#include "extremal/graph6.hpp"

namespace extremal {

nlohmann::ordered_json to_json(const ExtremalResult &r) {
  nlohmann::ordered_json j;
  j["family"] = to_string(r.family);
  j["N"] = r.N;
  if (r.exact) {
    j["value"] = r.value;
  } else {
    j["value"] = "unknown";
    j["lower_bound"] = r.value;
  }
  j["case"] = r.case_label;
  j["exact"] = r.exact;
  if (r.witness)
    j["witness"] = encode_graph6(*r.witness);
  return j;
}

nlohmann::ordered_json to_json(const OracleReport &r, bool include_timing) {
  nlohmann::ordered_json j;
  j["family"] = to_string(r.family);
  j["N"] = r.N;
  j["cap_mode"] = to_string(r.cap_mode);
  j["vertex_cap"] = r.vertex_cap;
  j["max_value"] = r.max_value;
  auto &w = j["witnesses"] = nlohmann::ordered_json::array();
  for (const CanonicalForm &f : r.witnesses)
    w.push_back(f.bytes);
  j["graphs_enumerated"] = r.graphs_enumerated;
  if (include_timing)
    j["elapsed_ms"] = r.elapsed.count();
  return j;
}

nlohmann::ordered_json to_json(const ExploreResult &r) {
  nlohmann::ordered_json j;
  j["N"] = r.N;
  j["value"] = r.value;
  j["witness"] = encode_graph6(r.best);
  j["origin"] = r.origin;
  j["iterations"] = r.iterations;
  j["bound"] = "lower bound (open question)";
  return j;
}

} // namespace extremal
