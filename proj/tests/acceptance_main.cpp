// Prints one line per acceptance criterion; exits 1 if any fails.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  hofc::AcceptanceOptions opt;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  if (only.empty())
    for (int id = 1; id <= hofc::kCriterionCount; ++id) only.push_back(id);
  int failed = 0;
  for (int id : only)
    for (const auto& r : hofc::run_acceptance(opt, {id})) {
      std::cout << hofc::format_result(r) << std::endl;
      failed += r.pass ? 0 : 1;
    }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
