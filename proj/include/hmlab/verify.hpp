#pragma once

#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace hmlab {

struct CriterionResult
{
  int id = 0;
  std::string title;
  bool ok = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;

  bool passed() const
  { return ok && seconds < limit_seconds; }
  /// "PASS  1  Nielsen counts  (0.02 s, limit 30 s)  ..."
  std::string line() const;
};

struct DeskSuiteOptions
{
  /// Criteria to run; empty means all ten.
  std::set<int> only;
  /// Receives each result line as soon as it is known.
  std::ostream *progress = nullptr;
};

/// The desk-scale acceptance checks, exact integer comparisons throughout.
std::vector<CriterionResult> run_desk_suite(DeskSuiteOptions const &opts = {});

} // namespace hmlab
