#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubeband::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `cubeband` command line. `args` excludes the program name.
/// Primary output goes to --out or `out`; diagnostics go to `err`. Summaries
/// go to `out` when --out is given, else to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubeband::cli
