// Acceptance grid: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cstdlib>
#include <iostream>

#include "quadgenus/selftest.hpp"

int main(int argc, char** argv) {
  quadgenus::SelftestOptions opts;
  if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);
  const auto report = quadgenus::run_full_selftest(opts);
  for (const auto& c : report.criteria) std::cout << quadgenus::format_outcome(c) << "\n";
  std::cout << (report.all_passed() ? "all criteria passed" : "some criteria FAILED") << "\n";
  return report.all_passed() ? EXIT_SUCCESS : EXIT_FAILURE;
}
