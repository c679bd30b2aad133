#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdiff {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomainError = 1,
  kExitResourceCeiling = 2,
  kExitVerificationFailed = 3,
};

/// Runs the `pdiff` command line in-process. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdiff
