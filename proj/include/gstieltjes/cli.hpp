#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gstieltjes::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kDomainError = 3,
};

/// Runs the gstj command line with `args` (program name excluded). Artifacts go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gstieltjes::cli
