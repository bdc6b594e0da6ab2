// Desk acceptance suite: one PASS/FAIL line per criterion.
#include <iostream>

#include "hmlab/verify.hpp"

int main()
{
  hmlab::DeskSuiteOptions opts;
  opts.progress = &std::cout;
  auto results = hmlab::run_desk_suite(opts);
  std::size_t passed = 0;
  for (auto const &r : results)
    passed += r.passed();
  std::cout << passed << "/" << results.size() << " criteria passed" << std::endl;
  return passed == results.size() ? 0 : 1;
}
