#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gwlp {

enum ExitStatus : int { kExitOk = 0, kExitValidation = 1, kExitUsage = 2 };

/// Runs one CLI invocation. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwlp
