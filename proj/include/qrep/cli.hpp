#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qrep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Parses `7`, `1..30` or comma lists of both, e.g. `1..5,9`. Levels must be
/// positive; order and duplicates are kept as written.
std::vector<int> parse_levels(const std::string& text);

/// Entry point of the `qrep` tool. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests: `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrep::cli
