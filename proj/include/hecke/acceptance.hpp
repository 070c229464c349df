#pragma once

#include <string>
#include <vector>

namespace hecke {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool holds = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
  bool passed() const { return holds && seconds < limit_seconds; }
};

constexpr int kCriterionCount = 10;

/// Runs acceptance criterion `id` in [1, 10].
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

/// "[PASS] C5 oracle equality (...) 12.3s / 300s".
std::string format_result(const CriterionResult& r);

}  // namespace hecke
