#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace varregion::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kNonConvergence = 3,
  kPropertyViolation = 4,
};

/// Runs the command line `args` (without the program name). Documents go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace varregion::cli
