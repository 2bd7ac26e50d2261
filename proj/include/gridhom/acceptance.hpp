#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gridhom {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  int random_grids = 100;  // criterion 3 corpus; criterion 5 uses the first half
  int fuzz_trials = 25;
};

// Runs the ten acceptance criteria in order. Never throws for a failing
// criterion; the failure is recorded in its result.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

// "PASS  3  d^2 = 0 ...  (1.23 s)"
std::string format_result(const CriterionResult& r);

}  // namespace gridhom
