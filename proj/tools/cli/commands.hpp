#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qseries::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kUsageError = 2,
  kDomainError = 3,
};

/// Runs one `qseries` invocation. `args` excludes the program name.
/// Results go to `out` (JSON envelope or CSV), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qseries::cli
