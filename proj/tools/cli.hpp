#pragma once

#include <optional>
#include <ostream>
#include <string_view>

namespace extremal::cli {

enum ExitCode : int {
  kOk = 0,       // verified, or an open case reported as unknown
  kMismatch = 1, // formula disagrees with a construction or the oracle
  kUsage = 2,    // malformed input or unsupported (family, N)
  kRefused = 3,  // enumeration estimate above the ceiling
};

// Environment variable consulted for the enumeration ceiling when the
// --ceiling flag is absent.
inline constexpr const char *kCeilingEnv = "SPECIALTY_ENUM_CEILING";

struct Range {
  long long first = 0;
  long long last = 0;
};

// "a..b" (inclusive) or a single "N".
std::optional<Range> parse_range(std::string_view text);

int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err);

} // namespace extremal::cli
