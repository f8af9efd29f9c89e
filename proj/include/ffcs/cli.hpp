#pragma once

#include <iosfwd>

namespace ffcs {

inline constexpr const char* kToolName = "ffcs";
inline constexpr const char* kToolVersion = "0.1.0";

/// Runs the `ffcs` command line. Data goes to `out` (or --out), diagnostics
/// to `err`. Returns 0 on success, 1 for invalid input, 2 for runtime
/// failures such as an exceeded enumeration cap.
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ffcs
