#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tyurin::cli {

inline constexpr const char* kToolName = "tyurin";
inline constexpr const char* kVersion = "1.0.0";

/// Runs one command line (without the program name). Writes the report to
/// `out` (or to --out) and diagnostics to `err`. Returns 0 for PASS, 1 for
/// FAIL or INCONCLUSIVE, 2 for usage and input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory searched by --fixture.
std::string fixture_dir();

} // namespace tyurin::cli
