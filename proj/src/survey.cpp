#include "codeaut/survey.hpp"

#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include "codeaut/error.hpp"

namespace codeaut {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void record_failure(CodeRecord& r, std::string field, const Error& e) {
  r.errors.push_back({std::move(field), std::string(e.tag()), e.what()});
}

const char* cyclic_text(Cyclicity c) {
  switch (c) {
    case Cyclicity::Yes:
      return "true";
    case Cyclicity::No:
      return "false";
    case Cyclicity::Undecided:
      break;
  }
  return "undecided";
}

}  // namespace

void SurveyConfig::validate() const {
  if (limits.codeword_cap == 0) throw Error(ErrorKind::InvalidArgument, "enumeration cap must be positive");
  if (element_cap == 0) throw Error(ErrorKind::InvalidArgument, "element cap must be positive");
  if (workers == 0) throw Error(ErrorKind::InvalidArgument, "worker count must be positive");
  if (time_budget && time_budget->count() <= 0) throw Error(ErrorKind::InvalidArgument, "time budget must be positive");
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_elementary(const LinearCode& c) {
  const std::size_t n = c.length();
  if (n == 0) return true;
  for (auto kind : {ElementaryKind::Zero, ElementaryKind::Repetition, ElementaryKind::EvenWeight, ElementaryKind::Full}) {
    if (c == elementary(kind, n)) return true;
  }
  return false;
}

bool is_affine_group(const PermGroup& g) {
  const std::size_t p = g.degree();
  if (!is_prime(p)) return false;
  for (const auto& gen : g.generators()) {
    const std::size_t b = gen(0);
    const std::size_t a = (gen(1) + p - b) % p;
    for (std::size_t x = 0; x < p; ++x) {
      if (gen(static_cast<Permutation::Point>(x)) != (a * x + b) % p) return false;
    }
  }
  return true;
}

std::string classify_automorphism_group(const LinearCode& c, const CodeSource& source, const PermGroup& g) {
  if (is_elementary(c)) return "elementary";
  if (auto expected = expected_group(source)) {
    if (expected->order == g.order() && g.contains_all(expected->generators)) {
      switch (expected->shape) {
        case GroupShape::Symmetric:
          return "elementary";
        case GroupShape::DirectProduct:
          return "direct-product";
        default:
          return "wreath";
      }
    }
  }
  const std::size_t p = c.length();
  if (p >= 3 && is_prime(p) && is_shift_invariant(c) && is_affine_group(g)) {
    const BigInt order = g.order();
    if (order % p == 0 && (p - 1) % (order / p) == 0) return "affine-type";
  }
  return "other";
}

CodeRecord analyze_code(const CodeSource& source, const SurveyConfig& config) {
  const auto start = Clock::now();
  try {
    const LinearCode code = build_code(source);
    CodeRecord r = analyze_code(source, code, config);
    r.total_seconds = seconds_since(start);
    return r;
  } catch (const Error& e) {
    CodeRecord r;
    r.source = describe(source);
    record_failure(r, "code", e);
    r.total_seconds = seconds_since(start);
    return r;
  }
}

CodeRecord analyze_code(const CodeSource& source, const LinearCode& code, const SurveyConfig& config) {
  const auto start = Clock::now();
  CodeRecord r;
  r.source = describe(source);
  r.n = code.length();
  r.k = code.dimension();

  try {
    const WeightSpectrum spectrum = weight_spectrum(code, config.limits);
    r.weight_spectrum = std::vector<std::size_t>(spectrum.begin(), spectrum.end());
    if (r.k == 0) {
      r.errors.push_back({"d", "empty", "the zero code has no minimum distance"});
    } else {
      r.d = *std::next(spectrum.begin());
    }
  } catch (const Error& e) {
    record_failure(r, "d", e);
  }

  std::optional<PermGroup> group;
  try {
    AutOptions options{config.limits, config.time_budget};
    AutReport report = automorphism_group(code, options);
    r.aut_seconds = report.elapsed.count();
    r.aut_order = report.group.order();
    r.aut_search = AutSearchStats{report.nodes, report.via_dual, report.weights_used, report.class_sizes};
    r.aut_classification = classify_automorphism_group(code, source, report.group);
    group = std::move(report.group);
  } catch (const Error& e) {
    record_failure(r, "aut", e);
  }

  if (r.n > 0 && is_shift_invariant(code)) {
    r.cyclic = Cyclicity::Yes;
    r.regular_cycle = Permutation::shift(r.n);
  } else {
    try {
      r.regular_cycle = regular_cycle_witness(source);
      r.cyclic = Cyclicity::Yes;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoWitness) record_failure(r, "cyclic", e);
    }
    if (r.cyclic != Cyclicity::Yes && group) {
      const RegularCycleResult found = find_regular_cycle(*group, config.element_cap);
      if (found.status == CycleStatus::Found) {
        r.cyclic = Cyclicity::Yes;
        r.regular_cycle = found.cycle;
      } else if (found.status == CycleStatus::None) {
        r.cyclic = Cyclicity::No;
      } else {
        r.errors.push_back({"cyclic", "undecided", "group order exceeds the element cap and no witness is known"});
      }
    }
  }
  r.total_seconds = seconds_since(start);
  return r;
}

std::vector<CodeRecord> analyze_batch(const std::vector<CodeSource>& sources, const SurveyConfig& config) {
  config.validate();
  std::vector<CodeRecord> records(sources.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < sources.size(); i = next++) records[i] = analyze_code(sources[i], config);
  };
  const unsigned threads = std::min<std::size_t>(config.workers, std::max<std::size_t>(sources.size(), 1));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  pool.clear();
  return records;
}

std::vector<CodeSource> cyclic_sources(std::size_t n, const SurveyConfig& config) {
  std::vector<CodeSource> sources;
  for (const auto& e : enumerate_cyclic_codes(n, 20, config.seed)) {
    sources.emplace_back(CyclicFromGenerator{n, e.generator});
  }
  return sources;
}

std::vector<CodeRecord> survey_prime(std::size_t p, const SurveyConfig& config) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not an odd prime");
  return analyze_batch(cyclic_sources(p, config), config);
}

std::string summary_table(const std::vector<CodeRecord>& records) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"source", "n", "k", "d", "|Aut|", "class", "cyclic"});
  for (const auto& r : records) {
    rows.push_back({r.source, std::to_string(r.n), std::to_string(r.k), r.d ? std::to_string(*r.d) : "-",
                    r.aut_order ? to_decimal(*r.aut_order) : "-", r.aut_classification.value_or("-"),
                    cyclic_text(r.cyclic)});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      out << (c + 1 < row.size() ? "  " : "\n");
    }
  }
  return out.str();
}

}  // namespace codeaut
