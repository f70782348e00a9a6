#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace singcount::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kComputationError = 3,
};

/// Runs one command line.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace singcount::cli
