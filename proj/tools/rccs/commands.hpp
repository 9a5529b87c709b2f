#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rccs::cli {

/// Process exit codes. Stable: scripts depend on them.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kPreconditionFailed = 2,
  kRejected = 3,
  kInternalError = 4,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`; `in` is read when the input path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rccs::cli
