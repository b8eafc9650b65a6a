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

std::set<std::vector<std::uint32_t>> closure_of(const std::vector<Permutation>& gens, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> raw;
  for (const auto& g : gens) raw.push_back(g.images());
  return oracle::group_closure(raw, n);
}

Permutation transpose_grid(std::size_t a) {
  std::vector<Permutation::Point> images(a * a);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) images[i * a + j] = static_cast<Permutation::Point>(j * a + i);
  }
  return Permutation(images);
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation p = Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}});
  CHECK(p.to_string() == "1 2 0 4 3");
  CHECK(p.to_cycle_string() == "(0 1 2)(3 4)");
  CHECK(p.order() == 6);
  CHECK(p.pow(6).is_identity());
  CHECK((p * p.inverse()).is_identity());
  CHECK(Permutation::parse("1 2 0 4 3") == p);
  CHECK(Permutation::shift(5).is_regular_cycle());
  CHECK_FALSE(p.is_regular_cycle());
  CHECK(Permutation::identity(3).to_cycle_string() == "()");
  CHECK(Permutation::from_cycles(4, {{2, 3}}).least_moved_point() == 2);
  // Right action: p * q applies p first.
  const Permutation q = Permutation::from_cycles(5, {{0, 3}});
  CHECK((p * q)(0) == q(p(0)));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
  CHECK_THROWS_AS(p * Permutation::identity(4), Error);
}

TEST_CASE("Schreier-Sims against closure on random groups") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    std::vector<Permutation> gens;
    const std::size_t count = rng() % 4;
    for (std::size_t i = 0; i < count; ++i) gens.push_back(random_perm(rng, n));
    const PermGroup g(n, gens);
    const auto elements = closure_of(gens, n);
    CAPTURE(n);
    CHECK(g.order() == elements.size());
    BigInt product = 1;
    for (auto s : g.orbit_sizes()) product *= s;
    CHECK(product == g.order());
    std::set<std::vector<std::uint32_t>> visited;
    std::size_t calls = 0;
    g.for_each_element([&](const Permutation& p) {
      ++calls;
      visited.insert(p.images());
      return true;
    });
    CHECK(calls == elements.size());
    CHECK(visited == elements);
    for (int probe = 0; probe < 20; ++probe) {
      const Permutation p = random_perm(rng, n);
      CHECK(g.contains(p) == (elements.count(p.images()) == 1));
    }
    for (const auto& s : g.strong_generators()) CHECK(g.contains(s));
  }
}

TEST_CASE("early stop in element enumeration") {
  const PermGroup g(5, symmetric_generators(5, {0, 1, 2, 3, 4}));
  std::size_t calls = 0;
  CHECK_FALSE(g.for_each_element([&](const Permutation&) { return ++calls < 10; }));
  CHECK(calls == 10);
}

TEST_CASE("symmetric and alternating groups") {
  const PermGroup sym5(5, symmetric_generators(5, {0, 1, 2, 3, 4}));
  CHECK(sym5.order() == 120);
  const PermGroup alt5(5, {Permutation::from_cycles(5, {{0, 1, 2}}), Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
  CHECK(alt5.order() == 60);
  CHECK(alt5.contains(Permutation::from_cycles(5, {{0, 1}, {2, 3}})));
  CHECK_FALSE(alt5.contains(Permutation::from_cycles(5, {{0, 1}})));
  CHECK(PermGroup(12, symmetric_generators(12, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11})).order() == 479001600);
  CHECK(PermGroup::trivial(4).order() == 1);
  CHECK(symmetric_generators(4, {2}).empty());
  CHECK(PermGroup(6, symmetric_generators(6, {1, 3, 5})).order() == 6);
  CHECK_THROWS_AS(PermGroup(4, {Permutation::identity(5)}), Error);
}

TEST_CASE("named groups have the stated orders") {
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = a; b <= 5; ++b) {
      CHECK(PermGroup(a * b, direct_product_generators(a, b)).order() == order_direct_product(a, b));
    }
  }
  for (std::size_t b = 1; b <= 6; ++b) {
    CHECK(PermGroup(2 * b, c2_wreath_generators(b)).order() == order_c2_wreath(b));
  }
  for (std::size_t b = 2; b <= 6; b += 2) {
    CHECK(PermGroup(2 * b, even_flip_wreath_generators(b)).order() * 2 == order_c2_wreath(b));
  }
  for (std::size_t a = 2; a <= 5; ++a) CHECK(PermGroup(a * a, symwr2_generators(a)).order() == order_symwr2(a));
  for (const auto& degrees : std::vector<std::vector<std::size_t>>{{3}, {3, 3}, {3, 5}, {2, 3}, {3, 3, 3}}) {
    const WreathShape shape(degrees);
    CHECK(PermGroup(shape.length(), wreath_generators(shape)).order() == order_iterated_wreath(shape));
  }
  CHECK(order_iterated_wreath(WreathShape({3, 3})) == 1296);
  CHECK(order_symwr2(3) == 72);
  CHECK(order_affine(4, 17) == 68);
}

TEST_CASE("family groups preserve their codes") {
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = a; b <= 5; ++b) {
      const LinearCode c = c0(a, b);
      for (const auto& g : direct_product_generators(a, b)) CHECK(is_invariant(c, g));
    }
  }
  for (std::size_t b = 2; b <= 6; ++b) {
    for (const auto& g : c2_wreath_generators(b)) CHECK(is_invariant(c0(2, b), g));
  }
  for (std::size_t b = 2; b <= 6; b += 2) {
    for (const auto& g : even_flip_wreath_generators(b)) CHECK(is_invariant(c1(2, b), g));
  }
  for (std::size_t a = 2; a <= 4; ++a) {
    for (const auto& g : symwr2_generators(a)) CHECK(is_invariant(c0(a, a), g));
  }
  const WreathShape shape({3, 3, 3});
  for (const auto& g : wreath_generators(shape)) CHECK(is_invariant(k_code(shape), g));
}

TEST_CASE("flipping one column of the 2 x b grid preserves c0 but not c1") {
  const Permutation flip = Permutation::from_cycles(12, {{0, 6}});
  CHECK(is_invariant(c0(2, 6), flip));
  CHECK_FALSE(is_invariant(c1(2, 6), flip));
}

TEST_CASE("transposing the square grid swaps rows and columns") {
  for (std::size_t a = 2; a <= 5; ++a) {
    const GridIndex g = GridIndex::normalized(a, a);
    const Permutation t = transpose_grid(a);
    for (std::size_t i = 0; i < a; ++i) CHECK(apply_permutation(row_matrix(g, i), t) == column_matrix(g, i));
    CHECK(is_invariant(c0(a, a), t));
  }
}

TEST_CASE("regular cycle witnesses") {
  const auto check_witness = [](const CodeSource& source, std::size_t expected_order) {
    const Permutation w = regular_cycle_witness(source);
    CHECK(w.is_regular_cycle());
    CHECK(w.order() == expected_order);
    CHECK(is_invariant(build_code(source), w));
  };
  check_witness(C0Family{1, 5}, 5);
  check_witness(C0Family{2, 3}, 6);
  check_witness(C0Family{2, 4}, 8);
  check_witness(C0Family{3, 4}, 12);
  check_witness(C1Family{3, 5}, 15);
  check_witness(KFamily{WreathShape({3, 3})}, 9);
  check_witness(KFamily{WreathShape({3, 5, 3})}, 45);
  check_witness(HammingFamily{3}, 7);
  check_witness(GolayFamily{}, 23);
  for (const CodeSource& none : std::vector<CodeSource>{C0Family{3, 3}, C0Family{4, 6}, C1Family{3, 3}}) {
    try {
      regular_cycle_witness(none);
      FAIL("witness for " << describe(none));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NoWitness);
    }
  }
}

TEST_CASE("regular cycle search in groups") {
  const PermGroup cyclic(6, {Permutation::shift(6)});
  const RegularCycleResult found = find_regular_cycle(cyclic);
  REQUIRE(found.status == CycleStatus::Found);
  CHECK(found.cycle->is_regular_cycle());
  CHECK(cyclic.contains(*found.cycle));

  // Sym(3) x Sym(3) on the 3 x 3 grid has no 9-cycle.
  const PermGroup grid(9, direct_product_generators(3, 3));
  CHECK(find_regular_cycle(grid).status == CycleStatus::None);
  CHECK(find_regular_cycle(grid, 10).status == CycleStatus::Undecided);

  // A supplied candidate short-circuits the enumeration even under a tiny cap.
  const PermGroup sym(7, symmetric_generators(7, {0, 1, 2, 3, 4, 5, 6}));
  const RegularCycleResult fast = find_regular_cycle(sym, 1, Permutation::shift(7));
  CHECK(fast.status == CycleStatus::Found);
  CHECK(fast.cycle == Permutation::shift(7));
}

TEST_CASE("relabeling by a regular cycle makes the code shift-invariant") {
  for (const CodeSource& source : std::vector<CodeSource>{C0Family{3, 4}, C0Family{2, 5}, KFamily{WreathShape({3, 3})}}) {
    const LinearCode c = build_code(source);
    const Permutation w = regular_cycle_witness(source);
    const Permutation rho = shift_relabeling(w);
    CHECK(rho.inverse() * w * rho == Permutation::shift(c.length()));
    const LinearCode relabeled = conjugate_code(c, rho);
    CHECK(is_shift_invariant(relabeled));
    CHECK(relabeled.dimension() == c.dimension());
    CHECK(weight_distribution(relabeled) == weight_distribution(c));
  }
  CHECK(is_shift_invariant(c0(3, 4)) == false);
  CHECK_THROWS_AS(shift_relabeling(Permutation::from_cycles(4, {{0, 1}})), Error);
}

TEST_CASE("cyclic group test") {
  CHECK(is_cyclic_group(PermGroup(6, {Permutation::from_cycles(6, {{0, 1}, {2, 3, 4}})})) == true);
  CHECK(is_cyclic_group(PermGroup(4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})})) ==
        false);
  CHECK(is_cyclic_group(PermGroup::trivial(3)) == true);
  CHECK_FALSE(is_cyclic_group(PermGroup(8, symmetric_generators(8, {0, 1, 2, 3, 4, 5, 6, 7})), 100).has_value());
}
