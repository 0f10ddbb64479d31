#include <cstdio>
#include <cstdlib>
#include <string>

#include "tir/verify/acceptance.hpp"

// Prints one line per criterion; exit status is the number of failures
// (capped), so ctest reports the run as failed when any criterion is red.
int main(int argc, char** argv) {
  int failures = 0;
  auto report = [&](const tir::verify::CriterionResult& r) {
    std::printf("[%s] criterion %2d  %-45s %7.3f s  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.detail.c_str());
    std::fflush(stdout);
    failures += !r.passed;
  };
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) report(tir::verify::run_criterion(std::atoi(argv[i])));
  } else {
    for (int id = 1; id <= tir::verify::kCriterionCount; ++id) report(tir::verify::run_criterion(id));
  }
  std::printf("%d of %d criteria failed\n", failures, argc > 1 ? argc - 1 : tir::verify::kCriterionCount);
  return failures == 0 ? 0 : 1;
}
