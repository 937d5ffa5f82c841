#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hofc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20261016;
  int threads = 0;
};

constexpr int kCriterionCount = 12;

// Runs the selected criteria (all when `only` is empty) in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, const std::vector<int>& only = {});
// "[PASS] 3 counting concordance (1.2s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace hofc
