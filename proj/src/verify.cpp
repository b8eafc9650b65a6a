#include "codeaut/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "codeaut/error.hpp"
#include "codeaut/families.hpp"
#include "codeaut/perm.hpp"
#include "codeaut/survey.hpp"

namespace codeaut {

namespace {

using Clock = std::chrono::steady_clock;

// Collects measured values and the first few mismatches of one criterion.
class Check {
 public:
  void note(const std::string& s) { notes_.push_back(s); }
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    passed_ = false;
    if (failures_.size() < 8) failures_.push_back(what);
    ++failure_count_;
  }
  bool passed() const { return passed_; }
  std::string detail() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < notes_.size(); ++i) out << (i ? "; " : "") << notes_[i];
    if (!failures_.empty()) {
      out << (notes_.empty() ? "" : "; ") << "mismatches (" << failure_count_ << "): ";
      for (std::size_t i = 0; i < failures_.size(); ++i) out << (i ? ", " : "") << failures_[i];
    }
    return out.str();
  }

 private:
  bool passed_ = true;
  std::vector<std::string> notes_;
  std::vector<std::string> failures_;
  std::size_t failure_count_ = 0;
};

std::string params(const LinearCode& c, std::optional<std::size_t> d) {
  return "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "," +
         (d ? std::to_string(*d) : std::string("-")) + "]";
}

AutOptions budget(double seconds) {
  AutOptions options;
  options.time_budget = std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
  return options;
}

std::set<std::size_t> grid_spectrum(std::size_t a, std::size_t b, bool even_only) {
  std::set<std::size_t> s;
  for (std::size_t x = 0; x <= a; ++x) {
    for (std::size_t y = 0; y <= b; ++y) {
      if (!even_only || (x + y) % 2 == 0) s.insert((a - x) * y + (b - y) * x);
    }
  }
  return s;
}

template <typename T>
std::string join(const T& values) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  return out.str();
}

// --- criteria ----------------------------------------------------------------

void c0_parameter_grid(Check& check) {
  std::size_t count = 0;
  for (std::size_t a = 1; a <= 6; ++a) {
    for (std::size_t b = a; a * b <= 36; ++b) {
      const LinearCode c = c0(a, b);
      const auto spectrum = weight_spectrum(c);
      const std::size_t d = *std::next(spectrum.begin());
      const std::string label = "c0(" + std::to_string(a) + "," + std::to_string(b) + ")";
      check.expect(c.dimension() == a + b - 1, label + " k=" + std::to_string(c.dimension()));
      check.expect(d == a, label + " d=" + std::to_string(d));
      check.expect(spectrum == grid_spectrum(a, b, false), label + " spectrum");
      ++count;
    }
  }
  check.note(std::to_string(count) + " grids with ab <= 36 checked for k = a+b-1, d = a and the closed-form spectrum");
}

void c1_parameter_grid(Check& check) {
  std::size_t equal = 0, even = 0;
  for (std::size_t a = 1; a <= 6; ++a) {
    for (std::size_t b = a; a * b <= 36; ++b) {
      const LinearCode one = c1(a, b);
      const std::string label = "c1(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if ((a + b) % 2 == 1) {
        check.expect(one == c0(a, b), label + " differs from c0");
        ++equal;
        continue;
      }
      ++even;
      check.expect(one.dimension() == a + b - 2, label + " k=" + std::to_string(one.dimension()));
      if (one.dimension() == 0) continue;  // a = b = 1: the zero code
      const auto spectrum = weight_spectrum(one);
      const std::size_t d = *std::next(spectrum.begin());
      const std::size_t expected_d = a < b ? 2 * a : 2 * a - 2;
      check.expect(d == expected_d, label + " d=" + std::to_string(d));
      check.expect(spectrum == grid_spectrum(a, b, true), label + " spectrum");
    }
  }
  check.note(std::to_string(equal) + " odd-sum grids equal to c0, " + std::to_string(even) +
             " even-sum grids checked for k, d and spectrum");
}

void grid_automorphisms(Check& check, bool c1_family,
                        const std::vector<std::tuple<std::size_t, std::size_t, std::uint64_t>>& cases) {
  for (const auto& [a, b, expected] : cases) {
    const CodeSource source = c1_family ? CodeSource(C1Family{a, b}) : CodeSource(C0Family{a, b});
    const auto start = Clock::now();
    const AutReport report = automorphism_group(build_code(source), budget(60));
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const BigInt order = report.group.order();
    const std::string label = describe(source);
    check.note(label + ": |Aut| = " + to_decimal(order) + " (expected " + std::to_string(expected) + ")");
    check.expect(order == expected, label + " order " + to_decimal(order));
    check.expect(seconds < 60, label + " took " + std::to_string(seconds) + " s");
    if (auto family = expected_group(source)) {
      check.expect(report.group.contains_all(family->generators), label + " misses " + family->name + " generators");
    }
  }
}

void cyclicity_grid(Check& check) {
  const LinearCode c34 = c0(3, 4);
  const AutReport aut34 = automorphism_group(c34, budget(10));
  const RegularCycleResult found = find_regular_cycle(aut34.group);
  check.expect(found.status == CycleStatus::Found, "no regular cycle in Aut(c0(3,4))");
  if (found.cycle) {
    const LinearCode relabeled = conjugate_code(c34, shift_relabeling(*found.cycle));
    check.expect(is_shift_invariant(relabeled), "relabeled c0(3,4) is not shift-invariant");
    check.note("Aut(c0(3,4)) regular cycle " + found.cycle->to_cycle_string() + ", relabeled code shift-invariant");
  }
  const AutReport aut33 = automorphism_group(c0(3, 3), budget(10));
  std::uint64_t visited = 0;
  aut33.group.for_each_element([&](const Permutation&) {
    ++visited;
    return true;
  });
  const RegularCycleResult none = find_regular_cycle(aut33.group);
  check.expect(none.status == CycleStatus::None, "Aut(c0(3,3)) search did not certify none");
  check.expect(visited == 72, "Aut(c0(3,3)) has " + std::to_string(visited) + " elements");
  check.note("Aut(c0(3,3)): none among " + std::to_string(visited) + " elements");
}

struct KCase {
  std::vector<std::size_t> shape;
  std::size_t n, k, d, codistance;
  std::uint64_t order;
};

void k_family_small(Check& check) {
  const std::vector<KCase> cases = {
      {{3}, 3, 2, 2, 1, 6},
      {{3, 3}, 9, 6, 2, 3, 1296},
      {{3, 5}, 15, 10, 2, 5, 933120},
      {{5, 3}, 15, 12, 2, 3, 10368000},
  };
  for (const auto& kc : cases) {
    const WreathShape shape(kc.shape);
    const LinearCode c = k_code(shape);
    const std::size_t d = min_distance(c);
    const std::size_t codistance = min_codistance(c);
    const auto start = Clock::now();
    const AutReport report = automorphism_group(c, budget(300));
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const std::string label = "K(" + shape.to_string() + ")";
    check.note(label + " = " + params(c, d) + ", codistance " + std::to_string(codistance) + ", |Aut| = " +
               to_decimal(report.group.order()));
    check.expect(c.length() == kc.n && c.dimension() == kc.k && d == kc.d, label + " parameters " + params(c, d));
    check.expect(codistance == kc.codistance && codistance == k_code_codistance_formula(shape),
                 label + " codistance " + std::to_string(codistance));
    check.expect(report.group.order() == kc.order, label + " order " + to_decimal(report.group.order()));
    check.expect(seconds < 300, label + " took " + std::to_string(seconds) + " s");
  }
}

void k333_generators(Check& check) {
  const WreathShape shape({3, 3, 3});
  const LinearCode c = k_code(shape);
  const std::size_t d = min_distance(c);
  check.expect(c.length() == 27 && c.dimension() == 20 && d == 2, "K(3,3,3) parameters " + params(c, d));
  const auto gens = wreath_generators(shape);
  const bool invariant = std::all_of(gens.begin(), gens.end(), [&](const Permutation& g) { return is_invariant(c, g); });
  check.expect(invariant, "a wreath generator moves K(3,3,3)");
  const BigInt order = PermGroup(27, gens).order();
  check.expect(order == BigInt("13060694016"), "wreath BSGS order " + to_decimal(order));
  const Permutation w = regular_cycle_witness(KFamily{shape});
  check.expect(w.order() == 27 && w.is_regular_cycle() && is_invariant(c, w), "witness is not a regular 27-cycle");
  check.note("K(3,3,3) = " + params(c, d) + ", " + std::to_string(gens.size()) + " wreath generators invariant, BSGS order " +
             to_decimal(order) + ", witness order " + std::to_string(w.order()));
}

void k333_full_search(Check& check) {
  const AutReport report = automorphism_group(k_code(WreathShape({3, 3, 3})), budget(600));
  check.note("|Aut(K(3,3,3))| = " + to_decimal(report.group.order()) + " after " + std::to_string(report.nodes) + " nodes");
  check.expect(report.group.order() == BigInt("13060694016"), "order " + to_decimal(report.group.order()));
}

void hamming_groups(Check& check) {
  for (const auto& [r, expected] : {std::pair{3U, 168ULL}, std::pair{4U, 20160ULL}}) {
    const LinearCode c = hamming(r);
    const AutReport report = automorphism_group(c, budget(120));
    const std::size_t d = min_distance(c);
    check.note("hamming(" + std::to_string(r) + ") = " + params(c, d) + ", |Aut| = " + to_decimal(report.group.order()));
    check.expect(d == 3, "hamming(" + std::to_string(r) + ") d=" + std::to_string(d));
    check.expect(report.group.order() == expected, "hamming(" + std::to_string(r) + ") order");
  }
}

void golay_group(Check& check) {
  const LinearCode c = golay23();
  const std::size_t d = min_distance(c);
  const AutReport report = automorphism_group(c, budget(600));
  check.note("golay = " + params(c, d) + ", |Aut| = " + to_decimal(report.group.order()));
  check.expect(c.length() == 23 && c.dimension() == 12 && d == 7, "golay parameters " + params(c, d));
  check.expect(report.group.order() == 10200960, "golay order " + to_decimal(report.group.order()));
}

void cyclic_counts(Check& check) {
  for (const auto& [n, expected] : {std::pair{7UL, 8UL}, std::pair{15UL, 32UL}, std::pair{17UL, 8UL}}) {
    const auto codes = enumerate_cyclic_codes(n);
    check.expect(codes.size() == expected, "N=" + std::to_string(n) + " gives " + std::to_string(codes.size()));
    check.note("N=" + std::to_string(n) + ": " + std::to_string(codes.size()) + " codes");
    if (n == 17) {
      std::multiset<std::size_t> dims;
      for (const auto& e : codes) dims.insert(e.code.dimension());
      check.expect(dims == std::multiset<std::size_t>{0, 1, 8, 8, 9, 9, 16, 17}, "N=17 dimensions " + join(dims));
    }
  }
  SurveyConfig config;
  config.time_budget = std::chrono::milliseconds(300'000);
  std::size_t non_elementary = 0;
  std::multiset<std::string> seen;
  for (const auto& r : survey_prime(17, config)) {
    if (r.aut_classification == "elementary") continue;
    ++non_elementary;
    const std::string p = "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," +
                          (r.d ? std::to_string(*r.d) : "-") + "]";
    seen.insert(p);
    check.expect(r.aut_order && *r.aut_order == 136, r.source + " |Aut| " + (r.aut_order ? to_decimal(*r.aut_order) : "-"));
    check.expect(p == "[17,8,6]" || p == "[17,9,5]", r.source + " parameters " + p);
  }
  check.expect(non_elementary == 4, std::to_string(non_elementary) + " non-elementary codes of length 17");
  check.note("survey 17: non-elementary " + join(seen) + ", all |Aut| = 136");
}

void survey_31(Check& check) {
  SurveyConfig config;
  config.time_budget = std::chrono::milliseconds(600'000);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> affine_rows, middle_rows;
  for (const auto& r : survey_prime(31, config)) {
    check.expect(r.errors.empty() || (r.k == 0 && r.errors.size() == 1), r.source + " has errors");
    if (r.aut_classification != "affine-type" || !r.d || !r.aut_order) continue;
    const auto m = static_cast<std::size_t>(*r.aut_order / 31);
    affine_rows.emplace(r.k, *r.d, m);
    if (r.k == 15 || r.k == 16) middle_rows.emplace(r.k, *r.d, m);
  }
  const std::set<std::tuple<std::size_t, std::size_t, std::size_t>> expected = {
      {15, 6, 5}, {16, 5, 5}, {15, 8, 5}, {16, 6, 5}, {15, 8, 15}, {16, 7, 15}};
  std::ostringstream rows;
  for (const auto& [k, d, m] : affine_rows) rows << " [31," << k << "," << d << "]:m=" << m;
  check.note("affine-type codes of length 31:" + rows.str());
  check.expect(middle_rows == expected, "k in {15,16} rows differ");
}

void nonexistence(Check& check) {
  std::size_t codes = 0, odd_orders = 0;
  for (std::size_t n = 3; n <= 21; n += 2) {
    const BigInt half_symmetric = factorial(static_cast<unsigned>(n)) / 2;
    const bool single_factor_prime = is_prime(n) && multiplicative_order_of_two(n) == n - 1;
    for (const auto& e : enumerate_cyclic_codes(n)) {
      ++codes;
      const AutReport report = automorphism_group(e.code, budget(600));
      const BigInt order = report.group.order();
      const std::string label = "N=" + std::to_string(n) + " g=" + e.generator.to_string();
      check.expect(order != half_symmetric, label + " has |Aut| = N!/2");
      if (order % 2 == 1) {
        ++odd_orders;
        const auto cyclic = is_cyclic_group(report.group);
        check.expect(cyclic.has_value(), label + " odd order beyond the element cap");
        check.expect(!cyclic.value_or(true), label + " Aut is cyclic of odd order");
      }
      if (single_factor_prime) check.expect(is_elementary(e.code), label + " is not elementary");
    }
  }
  check.note(std::to_string(codes) + " cyclic codes of odd length 3..21: no |Aut| = N!/2, " + std::to_string(odd_orders) +
             " groups of odd order (each must be non-cyclic), single-factor primes 3,5,11,13,19 elementary only");
}

void brute_force_oracle(Check& check) {
  std::vector<std::pair<std::string, LinearCode>> codes;
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng() % 8;
    const std::size_t gens = rng() % (n + 1);
    std::vector<BitVector> rows;
    for (std::size_t g = 0; g < gens; ++g) {
      BitVector v(n);
      for (std::size_t x = 0; x < n; ++x) {
        if (rng() & 1U) v.set(x);
      }
      rows.push_back(std::move(v));
    }
    codes.emplace_back("random#" + std::to_string(i), LinearCode(n, rows));
  }
  std::vector<CodeSource> family;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int kind = 0; kind <= 3; ++kind) family.emplace_back(ElementaryFamily{static_cast<ElementaryKind>(kind), n});
  }
  for (std::size_t a = 1; a <= 8; ++a) {
    for (std::size_t b = a; a * b <= 8; ++b) {
      family.emplace_back(C0Family{a, b});
      family.emplace_back(C1Family{a, b});
    }
  }
  for (const auto& shape : std::vector<std::vector<std::size_t>>{{3}, {5}, {7}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {2, 2, 2}}) {
    family.emplace_back(KFamily{WreathShape(shape)});
  }
  family.emplace_back(HammingFamily{3});
  for (std::size_t n : {3UL, 5UL, 7UL}) {
    for (const auto& e : enumerate_cyclic_codes(n)) family.emplace_back(CyclicFromGenerator{n, e.generator});
  }
  for (const auto& s : family) codes.emplace_back(describe(s), build_code(s));

  for (const auto& [label, c] : codes) {
    const BigInt order = automorphism_group(c, budget(300)).group.order();
    const std::uint64_t brute = brute_force_automorphism_order(c);
    check.expect(order == brute, label + ": search " + to_decimal(order) + " vs brute force " + std::to_string(brute));
  }
  check.note(std::to_string(codes.size()) + " codes of length <= 8 (50 random, " + std::to_string(family.size()) +
             " family members) agree with the N! brute force");
}

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  void (*run)(Check&);
};

void c0_automorphisms(Check& check) {
  grid_automorphisms(check, false,
                     {{1, 4, 24}, {2, 2, 24}, {2, 5, 3840}, {3, 3, 72}, {3, 4, 144}, {3, 5, 720}, {4, 5, 2880}});
}

void c1_automorphisms(Check& check) {
  grid_automorphisms(check, true, {{2, 2, 8}, {2, 4, 192}, {3, 3, 72}, {3, 5, 720}, {4, 4, 1152}});
}

std::vector<Criterion> criteria(Tier tier) {
  std::vector<Criterion> list = {
      {"1", "C0 parameter grid", 10, c0_parameter_grid},
      {"2", "C1 parameter grid", 10, c1_parameter_grid},
      {"3", "C0 automorphism orders", 7 * 60, c0_automorphisms},
      {"4", "C1 automorphism orders", 5 * 60, c1_automorphisms},
      {"5", "cyclicity of c0(3,4) and c0(3,3)", 10, cyclicity_grid},
      {"6", "K family at small scale", 4 * 300, k_family_small},
  };
  if (tier == Tier::Fast) return list;
  list.push_back({"7", "K(3,3,3) wreath generators and witness", 60, k333_generators});
  list.push_back({"8", "Hamming automorphism groups", 120, hamming_groups});
  if (tier == Tier::Extended) list.push_back({"9", "Golay automorphism group", 600, golay_group});
  list.push_back({"10", "cyclic enumeration counts and survey of length 17", 300, cyclic_counts});
  list.push_back({"11", "nonexistence checks over cyclic codes of odd length 3..21", 600, nonexistence});
  list.push_back({"12", "brute-force oracle agreement for N <= 8", 300, brute_force_oracle});
  if (tier == Tier::Extended) {
    list.push_back({"7x", "full automorphism search of K(3,3,3)", 600, k333_full_search});
    list.push_back({"10x", "affine-type codes of length 31", 600, survey_31});
  }
  return list;
}

}  // namespace

Tier parse_tier(std::string_view name) {
  if (name == "fast") return Tier::Fast;
  if (name == "full") return Tier::Full;
  if (name == "extended") return Tier::Extended;
  throw Error(ErrorKind::InvalidArgument, "unknown tier '" + std::string(name) + "' (fast, full, extended)");
}

std::vector<CriterionResult> run_verification(Tier tier, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  for (const auto& criterion : criteria(tier)) {
    CriterionResult r{criterion.id, criterion.title, false, "", 0, criterion.limit_seconds};
    Check check;
    const auto start = Clock::now();
    try {
      criterion.run(check);
      r.passed = check.passed();
      r.detail = check.detail();
    } catch (const std::exception& e) {
      r.detail = check.detail() + (check.detail().empty() ? "" : "; ") + "error: " + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (r.seconds > r.limit_seconds) {
      r.passed = false;
      r.detail += "; exceeded the time limit";
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result_line(const CriterionResult& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.detail << " (" << r.seconds
      << " s, limit " << r.limit_seconds << " s)";
  return out.str();
}

}  // namespace codeaut
