#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lpp::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // verification failure or census collision
  kUsage = 2,
  kInput = 3,    // unreadable or invalid input, or a size limit
};

// args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpp::cli
