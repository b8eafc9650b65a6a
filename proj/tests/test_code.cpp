#include <doctest.h>

#include <random>

#include "codeaut/code.hpp"
#include "codeaut/error.hpp"
#include "oracle.hpp"

using namespace codeaut;

namespace {

LinearCode random_code(std::mt19937_64& rng, std::size_t n) {
  return LinearCode(n, oracle::random_vectors(rng, n, rng() % (n + 1)));
}

}  // namespace

TEST_CASE("codes are equal iff their canonical bases agree") {
  const LinearCode a(3, {BitVector::parse("110"), BitVector::parse("011")});
  const LinearCode b(3, {BitVector::parse("101"), BitVector::parse("110"), BitVector::parse("011")});
  CHECK(a == b);
  CHECK(a.dimension() == 2);
  CHECK_FALSE(a == LinearCode::full(3));
  CHECK(LinearCode::zero(5).dimension() == 0);
  CHECK(LinearCode::full(5).dimension() == 5);
}

TEST_CASE("weight helpers") {
  const BitVector v = BitVector::parse("1101");
  const BitVector w = BitVector::parse("0111");
  CHECK(weight(v) == 3);
  CHECK(coweight(v) == 1);
  CHECK(common_weight(v, w) == 2);
  CHECK(support(w) == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("weight distribution agrees with span enumeration, through the code or its dual") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const LinearCode c = random_code(rng, n);
    const auto words = oracle::span_of(c.basis().rows(), n);
    const auto expected = oracle::weight_histogram(words);
    const auto dist = weight_distribution(c);
    REQUIRE(dist.size() == n + 1);
    for (std::size_t w = 0; w <= n; ++w) {
      const std::uint64_t e = expected.count(w) ? expected.at(w) : 0;
      CHECK(dist[w] == e);
    }
    WeightSpectrum spectrum;
    for (const auto& [w, count] : expected) spectrum.insert(w);
    CHECK(weight_spectrum(c) == spectrum);
    if (c.dimension() > 0) CHECK(min_distance(c) == *std::next(spectrum.begin()));
    CHECK(min_codistance(c) == n - *spectrum.rbegin());
  }
}

TEST_CASE("the dual is the set of orthogonal vectors") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const LinearCode c = random_code(rng, n);
    const LinearCode d = dual(c);
    CHECK(d.dimension() == n - c.dimension());
    CHECK(dual(d) == c);
    for (const auto& v : oracle::all_vectors(n)) {
      bool orthogonal = true;
      for (const auto& row : c.basis().rows()) orthogonal = orthogonal && common_weight(row, v) % 2 == 0;
      CHECK(d.contains(v) == orthogonal);
    }
  }
}

TEST_CASE("for_each_codeword visits each codeword exactly once") {
  const LinearCode c(6, {BitVector::parse("110000"), BitVector::parse("011100"), BitVector::parse("000111")});
  std::set<BitVector> seen;
  std::size_t calls = 0;
  for_each_codeword(c, [&](const BitVector& v) {
    ++calls;
    seen.insert(v);
  });
  CHECK(calls == 8);
  CHECK(seen == oracle::span_of(c.basis().rows(), 6));
}

TEST_CASE("enumeration cap is enforced on the smaller of code and dual") {
  const EnumerationLimits tiny{16};
  std::vector<BitVector> units;
  for (std::size_t i = 0; i < 5; ++i) units.push_back(BitVector::unit(10, i));
  const LinearCode c(10, units);
  try {
    weight_spectrum(c, tiny);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EnumerationInfeasible);
  }
  // The full space has a zero dual, so its spectrum needs no enumeration.
  CHECK(weight_spectrum(LinearCode::full(40), tiny).size() == 41);
  CHECK_THROWS_AS(for_each_codeword(LinearCode::full(40), [](const BitVector&) {}, tiny), Error);
}

TEST_CASE("minimum distance of the zero code is an error, its co-distance is N") {
  try {
    min_distance(LinearCode::zero(4));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Empty);
  }
  CHECK(min_codistance(LinearCode::zero(4)) == 4);
  CHECK(min_codistance(LinearCode::full(4)) == 0);
}

TEST_CASE("indecomposability agrees with the definition") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const LinearCode c = random_code(rng, n);
    const auto words = oracle::span_of(c.basis().rows(), n);
    for (const auto& v : words) {
      if (v.none()) {
        CHECK_THROWS_AS(is_indecomposable(c, v), Error);
        continue;
      }
      bool splits = false;
      for (const auto& w : words) {
        const BitVector rest = v ^ w;
        if (w.any() && rest.any() && common_weight(w, rest) == 0) splits = true;
      }
      CHECK(is_indecomposable(c, v) == !splits);
    }
  }
}

TEST_CASE("indecomposability errors") {
  const LinearCode c(4, {BitVector::parse("1100")});
  try {
    is_indecomposable(c, BitVector::parse("0011"));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInCode);
  }
}

TEST_CASE("permutations act on coordinates") {
  const Permutation p = Permutation::shift(4);
  CHECK(apply_permutation(BitVector::parse("1100"), p).to_string() == "0110");
  const LinearCode even(4, {BitVector::parse("1100"), BitVector::parse("0110"), BitVector::parse("0011")});
  CHECK(is_invariant(even, p));
  const LinearCode c(4, {BitVector::parse("1100")});
  CHECK_FALSE(is_invariant(c, p));
  CHECK(permute_code(c, p) == LinearCode(4, {BitVector::parse("0110")}));
  CHECK_THROWS_AS(is_invariant(c, Permutation::shift(5)), Error);
}

TEST_CASE("MacWilliams path on a large code matches the binomial closed form") {
  // Even-weight code of length 40: A_w = C(40, w) for even w.
  std::vector<BitVector> gens;
  for (std::size_t i = 1; i < 40; ++i) {
    BitVector v = BitVector::unit(40, 0);
    v.set(i);
    gens.push_back(v);
  }
  const auto dist = weight_distribution(LinearCode(40, gens));
  BigInt binom = 1;
  for (std::size_t w = 0; w <= 40; ++w) {
    CHECK(dist[w] == (w % 2 == 0 ? binom : BigInt(0)));
    binom = binom * (40 - w) / (w + 1);
  }
}
