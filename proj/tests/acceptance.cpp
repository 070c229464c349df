#include <iostream>

#include "hecke/acceptance.hpp"

int main() {
  int failures = 0;
  for (int id = 1; id <= hecke::kCriterionCount; ++id) {
    const auto result = hecke::run_criterion(id);
    std::cout << hecke::format_result(result) << std::endl;
    if (!result.passed()) ++failures;
  }
  std::cout << (failures ? "acceptance: FAILED " : "acceptance: all criteria passed") << (failures ? std::to_string(failures) : "")
            << std::endl;
  return failures ? 1 : 0;
}
