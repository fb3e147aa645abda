#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathstar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Exit codes:
/// 0 success, PASS or free; 1 FAIL or a copy of the forest was found;
/// 2 usage error.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace pathstar::cli
