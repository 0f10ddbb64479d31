#pragma once

// The fourteen acceptance criteria as callable checks.

#include <string>
#include <vector>

namespace tir::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 14;

/// Runs one criterion (1-based). Exceptions inside a check are reported as a
/// failure with the message in `detail`.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

}  // namespace tir::verify
