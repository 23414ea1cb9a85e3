#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tpscaffold::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kNotTotallyPositive = 1,
  kUsage = 2,
  kMalformedInput = 3,
  kPreconditionFailure = 4,
};

/// Runs one `tpscaf` invocation. `args` excludes the program name. Results go
/// to `out` unless an output path is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tpscaffold::cli
