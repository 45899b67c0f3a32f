#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weyl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `weylcalc` invocation. `args` excludes the program name. Results
/// go to `out` only on success; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weyl::cli
