#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nearcentral::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitGuard = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

/// Runs one invocation. `args` excludes the program name. Writes exactly one
/// JSON document (or the requested CSV/text table) to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nearcentral::cli
