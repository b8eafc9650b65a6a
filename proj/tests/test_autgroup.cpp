#include <doctest.h>

#include <random>

#include "codeaut/error.hpp"
#include "codeaut/perm.hpp"
#include "oracle.hpp"

using namespace codeaut;

namespace {

Permutation random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<Permutation::Point> images(n);
  std::iota(images.begin(), images.end(), 0U);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

LinearCode random_code(std::mt19937_64& rng, std::size_t n) {
  return LinearCode(n, oracle::random_vectors(rng, n, rng() % (n + 1)));
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("known automorphism group orders") {
  CHECK(automorphism_group(elementary(ElementaryKind::EvenWeight, 4)).group.order() == 24);
  CHECK(automorphism_group(c0(3, 4)).group.order() == 144);
  CHECK(automorphism_group(c0(3, 3)).group.order() == 72);
  CHECK(automorphism_group(c0(2, 5)).group.order() == 3840);
  CHECK(automorphism_group(hamming(3)).group.order() == 168);
  CHECK(automorphism_group(hamming(4)).group.order() == 20160);
  CHECK(automorphism_group(golay23()).group.order() == BigInt(10200960));
  CHECK(automorphism_group(k_code(WreathShape({3, 3}))).group.order() == 1296);
  CHECK(automorphism_group(LinearCode::zero(6)).group.order() == 720);
  CHECK(automorphism_group(LinearCode::full(6)).group.order() == 720);
}

TEST_CASE("generators of the computed group preserve the code, also through the dual") {
  for (const LinearCode& c : {c0(3, 4), c1(3, 5), hamming(4), golay23(), k_code(WreathShape({3, 5}))}) {
    const AutReport r = automorphism_group(c);
    for (const auto& g : r.group.generators()) CHECK(is_invariant(c, g));
    const AutReport d = automorphism_group(dual(c));
    CHECK(d.group.order() == r.group.order());
    CHECK(d.group.contains_all(r.group.generators()));
    CHECK(r.group.contains_all(d.group.generators()));
  }
  CHECK(automorphism_group(hamming(4)).via_dual);
  CHECK_FALSE(automorphism_group(dual(hamming(4))).via_dual);
}

TEST_CASE("report fields describe the spanning set") {
  const AutReport r = automorphism_group(c0(3, 4));
  CHECK_FALSE(r.weights_used.empty());
  CHECK(r.weights_used.size() == r.class_sizes.size());
  CHECK(r.nodes > 0);
}

TEST_CASE("orders agree with brute force over all permutations on random codes") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const LinearCode c = random_code(rng, n);
    const auto words = oracle::span_of(c.basis().rows(), n);
    CAPTURE(n);
    CAPTURE(c.dimension());
    const AutReport r = automorphism_group(c);
    CHECK(r.group.order() == oracle::automorphism_count(words, n));
    CHECK(brute_force_automorphism_order(c) == oracle::automorphism_count(words, n));
  }
}

TEST_CASE("relabeling the code conjugates the group") {
  std::mt19937_64 rng(31);
  for (const LinearCode& c : {c0(2, 5), c1(3, 3), hamming(3), k_code(WreathShape({3, 3}))}) {
    const Permutation p = random_perm(rng, c.length());
    const PermGroup g = automorphism_group(c).group;
    const PermGroup h = automorphism_group(permute_code(c, p)).group;
    CHECK(h.order() == g.order());
    for (const auto& x : g.generators()) CHECK(h.contains(p.inverse() * x * p));
  }
}

TEST_CASE("containing the alternating group forces an elementary code") {
  // Random codes of length 3..6, then the elementary codes up to length 8.
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    const LinearCode c = random_code(rng, n);
    const BigInt order = automorphism_group(c).group.order();
    const bool elementary_code = c == elementary(ElementaryKind::Zero, n) || c == elementary(ElementaryKind::Repetition, n) ||
                                 c == elementary(ElementaryKind::EvenWeight, n) || c == elementary(ElementaryKind::Full, n);
    CHECK((order * 2 >= factorial(n)) == elementary_code);
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    for (auto kind : {ElementaryKind::Zero, ElementaryKind::Repetition, ElementaryKind::EvenWeight, ElementaryKind::Full}) {
      CHECK(automorphism_group(elementary(kind, n)).group.order() == factorial(n));
    }
  }
}

TEST_CASE("limits surface as errors") {
  AutOptions tiny;
  tiny.limits.codeword_cap = 8;
  try {
    automorphism_group(golay23(), tiny);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EnumerationInfeasible);
  }
  AutOptions rushed;
  rushed.time_budget = std::chrono::milliseconds(0);
  try {
    automorphism_group(k_code(WreathShape({3, 3, 3})), rushed);
    FAIL("budget not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  CHECK_THROWS_AS(brute_force_automorphism_order(c0(3, 4)), Error);
}
