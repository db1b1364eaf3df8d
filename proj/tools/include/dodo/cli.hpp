#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dodo::cli {

/// Process exit codes.
enum ExitCode : int {
  kFeasible = 0,
  kInfeasible = 1,
  kInputError = 2,
  kUndecided = 3,
};

/// Runs one verb. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dodo::cli
