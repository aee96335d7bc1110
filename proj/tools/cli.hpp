#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ads3::cli {

enum ExitCode : int { kOk = 0, kInconclusive = 1, kUsage = 2, kBudget = 3 };

// Runs the command line (args[0] is the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ads3::cli
