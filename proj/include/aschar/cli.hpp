#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aschar {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitInfeasible = 3,
  kExitVerificationFailed = 4,
};

// Runs the command line `aschar args...` (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aschar
