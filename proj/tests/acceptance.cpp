// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: acceptance [fast|full|extended]   (default: full)

#include <iostream>

#include "codeaut/error.hpp"
#include "codeaut/verify.hpp"

int main(int argc, char** argv) {
  codeaut::Tier tier = codeaut::Tier::Full;
  try {
    if (argc > 1) tier = codeaut::parse_tier(argv[1]);
  } catch (const codeaut::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  std::size_t failed = 0, total = 0;
  codeaut::run_verification(tier, [&](const codeaut::CriterionResult& r) {
    ++total;
    if (!r.passed) ++failed;
    std::cout << codeaut::format_result_line(r) << std::endl;
  });
  std::cout << (total - failed) << "/" << total << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
