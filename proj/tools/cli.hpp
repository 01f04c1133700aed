#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gridcodes::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kDomainError = 2,
  kBudgetError = 3,
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridcodes::cli
