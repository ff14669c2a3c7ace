#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bjorling::cli {

enum ExitCode : int {
  ok = 0,
  verification_failed = 1,
  input_error = 2,
  numerical_failure = 3,
};

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bjorling::cli
