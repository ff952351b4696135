#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace heterotree::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerifiedNegative = 1,
  kInvalidInput = 2,
  kBudgetExceeded = 3,
  kInternalError = 4,
};

// Runs one command line (without the program name). Results go to `out` (or
// the --output file); errors are written to `err` as a JSON object.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace heterotree::cli
