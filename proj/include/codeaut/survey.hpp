#pragma once

// Per-code analysis records and batch surveys over code families.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codeaut/families.hpp"
#include "codeaut/perm.hpp"

namespace codeaut {

struct SurveyConfig {
  EnumerationLimits limits;
  std::uint64_t element_cap = 10'000'000;
  std::optional<std::chrono::milliseconds> time_budget;  // per code
  unsigned workers = 1;
  std::uint64_t seed = 0x5eed;  // root-of-unity search in factorizations

  /// Throws InvalidArgument for a zero cap or zero workers.
  void validate() const;
};

struct RecordError {
  std::string field;  // "d", "aut", "cyclic", ...
  std::string tag;    // error_tag of the failure
  std::string message;
};

struct AutSearchStats {
  std::uint64_t nodes = 0;
  bool via_dual = false;
  std::vector<std::size_t> weights_used;
  std::vector<std::size_t> class_sizes;
};

enum class Cyclicity { Yes, No, Undecided };

struct CodeRecord {
  std::string source;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> d;
  std::optional<std::vector<std::size_t>> weight_spectrum;
  std::optional<BigInt> aut_order;
  std::optional<std::string> aut_classification;  // elementary, direct-product, wreath, affine-type, other
  Cyclicity cyclic = Cyclicity::Undecided;
  std::optional<Permutation> regular_cycle;
  std::optional<AutSearchStats> aut_search;
  std::vector<RecordError> errors;
  // Timing lives apart from the deterministic fields.
  double total_seconds = 0;
  double aut_seconds = 0;
};

/// The code is E0, E1, E2 or E3 of its length.
bool is_elementary(const LinearCode& c);

/// Every generator acts as x -> a x + b modulo the (prime) length.
bool is_affine_group(const PermGroup& g);

/// Classification tag for Aut(c) = g; `source` supplies the expected family group.
std::string classify_automorphism_group(const LinearCode& c, const CodeSource& source, const PermGroup& g);

/// n, k, d, weight spectrum, Aut and cyclicity of one code. Failures become
/// record errors and "undecided" fields; nothing is thrown.
CodeRecord analyze_code(const CodeSource& source, const SurveyConfig& config);
CodeRecord analyze_code(const CodeSource& source, const LinearCode& code, const SurveyConfig& config);

/// Analyzes the sources on config.workers threads; records are returned in input order.
std::vector<CodeRecord> analyze_batch(const std::vector<CodeSource>& sources, const SurveyConfig& config);

/// Every cyclic code of prime length p, in enumeration order.
/// Throws InvalidArgument unless p is an odd prime.
std::vector<CodeRecord> survey_prime(std::size_t p, const SurveyConfig& config);

/// Sources "cyclic p g" for every enumerated cyclic code of length n.
std::vector<CodeSource> cyclic_sources(std::size_t n, const SurveyConfig& config);

bool is_prime(std::size_t n);

/// Aligned text table of the main record fields.
std::string summary_table(const std::vector<CodeRecord>& records);

}  // namespace codeaut
