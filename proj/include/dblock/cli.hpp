#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dblock {

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitUsage = 2, kExitCap = 3 };

/// Environment variable overriding the default --max-order.
inline constexpr const char* kMaxOrderEnv = "DBLOCK_MAX_ORDER";

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dblock
