#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hmlab {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  exit_ok = 0,
  exit_hypothesis = 1,
  exit_budget = 2,
  exit_usage = 64,
};

/// Runs one command; the report goes to `out`, diagnostics to `err`.
int dispatch(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);
int dispatch(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

} // namespace hmlab
