#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dirac_rm::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kNoState = 3,
  kNumerical = 4,
};

/// Runs one invocation. `args` excludes the program name. Normal output
/// goes to `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dirac_rm::cli
