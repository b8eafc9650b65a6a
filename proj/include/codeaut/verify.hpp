#pragma once

// Acceptance checks over the code families, shared by the command-line
// `verify-paper` runner and the acceptance test binary.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace codeaut {

enum class Tier { Fast, Full, Extended };

/// "fast", "full" or "extended"; throws InvalidArgument otherwise.
Tier parse_tier(std::string_view name);

struct CriterionResult {
  std::string id;     // "1" ... "12", "7x", "10x"
  std::string title;
  bool passed = false;
  std::string detail;  // measured values
  double seconds = 0;
  double limit_seconds = 0;
};

/// Runs every criterion of the tier in order; `on_result` sees each result
/// as soon as it is available.
std::vector<CriterionResult> run_verification(Tier tier,
                                              const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS [3] C0 automorphism orders: ... (0.01 s, limit 60 s)"
std::string format_result_line(const CriterionResult& r);

}  // namespace codeaut
