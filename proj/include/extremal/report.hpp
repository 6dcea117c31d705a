#pragma once

#include <json.hpp>

#include "extremal/explore.hpp"
#include "extremal/formulas.hpp"
#include "extremal/oracle.hpp"

namespace extremal {

// {"family","N","value","case","exact"[,"witness"]}; the witness is a
// graph6 string. Inexact results carry "value": "unknown" and the best
// known construction under "lower_bound".
nlohmann::ordered_json to_json(const ExtremalResult &r);

// {"family","N","cap_mode","vertex_cap","max_value","witnesses",
//  "graphs_enumerated"[,"elapsed_ms"]}. Timing is optional so that reports
// can be compared byte for byte.
nlohmann::ordered_json to_json(const OracleReport &r, bool include_timing = true);

nlohmann::ordered_json to_json(const ExploreResult &r);

} // namespace extremal
