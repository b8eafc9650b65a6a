#include <doctest.h>

#include <random>

#include "codeaut/error.hpp"
#include "codeaut/json_io.hpp"
#include "codeaut/survey.hpp"
#include "oracle.hpp"

using namespace codeaut;

namespace {

Json without_timing(const CodeRecord& r) {
  Json j = record_to_json(r);
  j.erase("timing");
  return j;
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("record for c0 3 4") {
  const CodeRecord r = analyze_code(C0Family{3, 4}, SurveyConfig{});
  CHECK(r.source == "c0 3 4");
  CHECK(r.n == 12);
  CHECK(r.k == 6);
  CHECK(r.d == 3U);
  CHECK(r.weight_spectrum == std::vector<std::size_t>{0, 3, 4, 5, 6, 7, 8, 9, 12});
  CHECK(r.aut_order == BigInt(144));
  CHECK(r.aut_classification == "direct-product");
  CHECK(r.cyclic == Cyclicity::Yes);
  REQUIRE(r.regular_cycle.has_value());
  CHECK(r.regular_cycle->is_regular_cycle());
  CHECK(is_invariant(c0(3, 4), *r.regular_cycle));
  CHECK(r.errors.empty());
}

TEST_CASE("records for non-cyclic, wreath and elementary codes") {
  const CodeRecord grid = analyze_code(C0Family{3, 3}, SurveyConfig{});
  CHECK(grid.cyclic == Cyclicity::No);
  CHECK(grid.aut_classification == "wreath");
  CHECK_FALSE(grid.regular_cycle.has_value());

  const CodeRecord golay = analyze_code(GolayFamily{}, SurveyConfig{});
  CHECK(golay.d == 7U);
  CHECK(golay.aut_order == BigInt(10200960));
  CHECK(golay.aut_classification == "other");
  CHECK(golay.cyclic == Cyclicity::Yes);

  const CodeRecord even = analyze_code(ElementaryFamily{ElementaryKind::EvenWeight, 5}, SurveyConfig{});
  CHECK(even.aut_order == BigInt(120));
  CHECK(even.aut_classification == "elementary");
  CHECK(even.d == 2U);

  const CodeRecord zero = analyze_code(ElementaryFamily{ElementaryKind::Zero, 5}, SurveyConfig{});
  CHECK_FALSE(zero.d.has_value());
  REQUIRE(zero.errors.size() == 1);
  CHECK(zero.errors[0].field == "d");
  CHECK(zero.errors[0].tag == "empty");
}

TEST_CASE("analysis never throws: failures become record errors") {
  SurveyConfig tight;
  tight.limits.codeword_cap = 4;
  const CodeRecord r = analyze_code(GolayFamily{}, tight);
  CHECK(r.n == 23);
  CHECK(r.k == 12);
  CHECK_FALSE(r.aut_order.has_value());
  CHECK_FALSE(r.errors.empty());
  for (const auto& e : r.errors) CHECK(e.tag == "enumeration-infeasible");

  SurveyConfig bad;
  bad.workers = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("classification helpers") {
  CHECK(is_elementary(elementary(ElementaryKind::Repetition, 6)));
  CHECK_FALSE(is_elementary(c0(2, 3)));
  // x -> 2x + 1 mod 5 and the shift.
  const PermGroup affine(5, {Permutation::shift(5), Permutation({1, 3, 0, 2, 4})});
  CHECK(is_affine_group(affine));
  CHECK_FALSE(is_affine_group(PermGroup(5, {Permutation::from_cycles(5, {{0, 1}})})));
  CHECK(is_prime(17));
  CHECK_FALSE(is_prime(15));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("survey of length 7: Hamming codes and the elementary codes") {
  const auto records = survey_prime(7, SurveyConfig{});
  REQUIRE(records.size() == 8);
  std::size_t hamming_like = 0;
  for (const auto& r : records) {
    CHECK(r.cyclic == Cyclicity::Yes);
    REQUIRE(r.aut_order.has_value());
    if (*r.aut_order == 168) {
      ++hamming_like;
      CHECK(r.aut_classification == "other");
    } else {
      CHECK(*r.aut_order == 5040);
      CHECK(r.aut_classification == "elementary");
    }
  }
  CHECK(hamming_like == 4);
}

TEST_CASE("survey of length 5 is all elementary, length 17 has four affine-type codes") {
  for (const auto& r : survey_prime(5, SurveyConfig{})) CHECK(r.aut_classification == "elementary");
  std::size_t affine = 0;
  for (const auto& r : survey_prime(17, SurveyConfig{})) {
    if (r.aut_classification == "affine-type") {
      ++affine;
      CHECK(r.aut_order == BigInt(136));
    } else {
      CHECK(r.aut_classification == "elementary");
    }
  }
  CHECK(affine == 4);
  CHECK_THROWS_AS(survey_prime(15, SurveyConfig{}), Error);
  CHECK_THROWS_AS(survey_prime(2, SurveyConfig{}), Error);
}

TEST_CASE("batch results do not depend on the worker count") {
  std::vector<CodeSource> sources = cyclic_sources(15, SurveyConfig{});
  sources.push_back(C0Family{2, 5});
  sources.push_back(C1Family{3, 3});
  sources.push_back(KFamily{WreathShape({3, 3})});
  SurveyConfig one;
  SurveyConfig four;
  four.workers = 4;
  const auto a = analyze_batch(sources, one);
  const auto b = analyze_batch(sources, four);
  REQUIRE(a.size() == sources.size());
  REQUIRE(b.size() == sources.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].source == describe(sources[i]));
    CHECK(without_timing(a[i]) == without_timing(b[i]));
  }
}

TEST_CASE("group orders divide N! and match brute force for short codes") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    const LinearCode c(n, oracle::random_vectors(rng, n, rng() % (n + 1)));
    const CodeRecord r = analyze_code(ExplicitCode{"random", c}, c, SurveyConfig{});
    REQUIRE(r.aut_order.has_value());
    CHECK(factorial(n) % *r.aut_order == 0);
    CHECK(*r.aut_order == oracle::automorphism_count(oracle::span_of(c.basis().rows(), n), n));
  }
}

TEST_CASE("JSON round trips") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 80;
    const LinearCode c(n, oracle::random_vectors(rng, n, rng() % 6));
    const Json j = code_to_json(c);
    CHECK(j["n"] == n);
    CHECK(j["k"] == c.dimension());
    CHECK(code_from_json(Json::parse(j.dump())) == c);
  }
  const PermGroup g = automorphism_group(c0(3, 4)).group;
  const PermGroup back = group_from_json(Json::parse(group_to_json(g).dump()));
  CHECK(back.order() == g.order());
  CHECK(back.contains_all(g.generators()));
  CHECK(group_to_json(g)["order"] == "144");

  CHECK_THROWS_AS(code_from_json(Json::parse(R"({"n": 3, "basis": ["101", "11"]})")), Error);
  CHECK_THROWS_AS(code_from_json(Json::parse(R"({"n": 3, "k": 2, "basis": ["101"]})")), Error);
  CHECK_THROWS_AS(code_from_json(Json::parse(R"({"basis": []})")), Error);
}

TEST_CASE("record JSON keeps a fixed key order") {
  const Json j = record_to_json(analyze_code(C0Family{2, 3}, SurveyConfig{}));
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"source", "n", "k", "d", "weight_spectrum", "aut_order", "aut_classification",
                                         "cyclic", "regular_cycle", "aut_search", "errors", "timing"});
  CHECK(j["cyclic"] == true);
  CHECK(j["aut_order"] == "48");
  const Json undecided = record_to_json(CodeRecord{});
  CHECK(undecided["cyclic"] == "undecided");
}

TEST_CASE("factorization JSON") {
  const Json j = factorization_to_json(factor_cyclotomic(7));
  CHECK(j["N"] == 7);
  CHECK(j["extension_degree"] == 3);
  REQUIRE(j["factors"].size() == 3);
  CHECK(j["factors"][0]["polynomial"] == "1+x");
  CHECK(j["factors"][1]["degree"] == 3);
}
