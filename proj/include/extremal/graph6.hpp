#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "extremal/graph.hpp"

namespace extremal {

class Graph6Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Standard graph6: size header (1, 4 or 8 bytes), then the upper triangle
// column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed big-endian
// into 6-bit groups, each offset by 63.
std::string encode_graph6(const Graph &g);

// Accepts an optional ">>graph6<<" prefix. Throws Graph6Error on bad
// characters, malformed size headers, wrong length or non-zero padding.
Graph decode_graph6(std::string_view text);

} // namespace extremal
