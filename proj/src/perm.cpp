#include "codeaut/perm.hpp"

#include <algorithm>
#include <numeric>

#include "codeaut/error.hpp"

namespace codeaut {

namespace {

using Point = Permutation::Point;

bool fixes_prefix(const Permutation& p, const std::vector<Point>& base, std::size_t count) {
  for (std::size_t j = 0; j < count; ++j) {
    if (p(base[j]) != base[j]) return false;
  }
  return true;
}

template <typename F>
Permutation grid_permutation(const GridIndex& g, F&& map) {
  std::vector<Point> images(g.size());
  for (std::size_t i = 0; i < g.a; ++i) {
    for (std::size_t j = 0; j < g.b; ++j) {
      const auto [ii, jj] = map(i, j);
      images[g.flatten(i, j)] = static_cast<Point>(g.flatten(ii, jj));
    }
  }
  return Permutation(std::move(images));
}

// Transposition (0 1) and cycle (0 1 ... n-1) on {0..n-1}, as index maps.
std::vector<std::vector<std::size_t>> symmetric_index_maps(std::size_t n) {
  if (n < 2) return {};
  std::vector<std::size_t> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  if (n == 2) return {swap};
  return {swap, cycle};
}

void append_unique(std::vector<Permutation>& out, Permutation p) {
  if (p.is_identity()) return;
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
}

}  // namespace

// --- PermGroup ---------------------------------------------------------------

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators) : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw Error(ErrorKind::LengthMismatch, "generator degree differs from group degree");
    append_unique(generators_, std::move(g));
  }
  schreier_sims();
}

void PermGroup::rebuild_orbit(Level& level) const {
  level.transversal_index.assign(degree_, -1);
  level.orbit.assign(1, level.base_point);
  level.reps.assign(1, Permutation::identity(degree_));
  level.inverse_reps.assign(1, Permutation::identity(degree_));
  level.transversal_index[level.base_point] = 0;
  for (std::size_t t = 0; t < level.orbit.size(); ++t) {
    const Point x = level.orbit[t];
    for (const auto& g : level.generators) {
      const Point y = g(x);
      if (level.transversal_index[y] >= 0) continue;
      level.transversal_index[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      Permutation rep = level.reps[t] * g;
      level.inverse_reps.push_back(rep.inverse());
      level.reps.push_back(std::move(rep));
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation p, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    const std::int32_t t = level.transversal_index[p(level.base_point)];
    if (t < 0) return {std::move(p), l};
    p = p * level.inverse_reps[static_cast<std::size_t>(t)];
  }
  return {std::move(p), levels_.size()};
}

void PermGroup::schreier_sims() {
  strong_ = generators_;
  base_.clear();
  for (const auto& s : strong_) {
    if (fixes_prefix(s, base_, base_.size())) base_.push_back(static_cast<Point>(s.least_moved_point()));
  }
  levels_.assign(base_.size(), Level{});
  for (std::size_t i = 0; i < base_.size(); ++i) {
    levels_[i].base_point = base_[i];
    for (const auto& s : strong_) {
      if (fixes_prefix(s, base_, i)) levels_[i].generators.push_back(s);
    }
    rebuild_orbit(levels_[i]);
  }

  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t level_index = i - 1;
    bool extended = false;
    const Level& level = levels_[level_index];
    for (std::size_t t = 0; !extended && t < level.orbit.size(); ++t) {
      for (std::size_t s = 0; !extended && s < level.generators.size(); ++s) {
        const Permutation& gen = level.generators[s];
        const Point image = gen(level.orbit[t]);
        const auto u = static_cast<std::size_t>(level.transversal_index[image]);
        Permutation schreier = level.reps[t] * gen * level.inverse_reps[u];
        if (schreier.is_identity()) continue;
        auto [residue, stop] = sift(std::move(schreier), level_index + 1);
        if (residue.is_identity()) continue;
        if (stop == levels_.size()) {
          base_.push_back(static_cast<Point>(residue.least_moved_point()));
          levels_.push_back(Level{});
          levels_.back().base_point = base_.back();
        }
        strong_.push_back(residue);
        for (std::size_t l = level_index + 1; l <= stop; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = stop + 1;
        extended = true;
      }
    }
    if (!extended) --i;
  }
}

std::vector<std::size_t> PermGroup::orbit_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& level : levels_) sizes.push_back(level.orbit.size());
  return sizes;
}

BigInt PermGroup::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, stop] = sift(p, 0);
  return stop == levels_.size() && residue.is_identity();
}

bool PermGroup::contains_all(const std::vector<Permutation>& ps) const {
  return std::all_of(ps.begin(), ps.end(), [&](const Permutation& p) { return contains(p); });
}

bool PermGroup::for_each_element(const std::function<bool(const Permutation&)>& visit) const {
  // Every element is uniquely r_{L-1} * ... * r_0 with r_l a coset representative of level l.
  std::function<bool(std::size_t, const Permutation&)> descend = [&](std::size_t remaining,
                                                                     const Permutation& prefix) {
    if (remaining == 0) return visit(prefix);
    const Level& level = levels_[remaining - 1];
    for (const auto& rep : level.reps) {
      if (!descend(remaining - 1, prefix * rep)) return false;
    }
    return true;
  };
  return descend(levels_.size(), Permutation::identity(degree_));
}

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators) {
  return PermGroup(degree, std::move(generators));
}

// --- named groups ------------------------------------------------------------

std::vector<Permutation> symmetric_generators(std::size_t degree, const std::vector<Point>& points) {
  std::vector<Permutation> gens;
  for (const auto& map : symmetric_index_maps(points.size())) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t t = 0; t < points.size(); ++t) images[points[t]] = points[map[t]];
    append_unique(gens, Permutation(std::move(images)));
  }
  return gens;
}

std::vector<Permutation> direct_product_generators(std::size_t a, std::size_t b) {
  const GridIndex g{a, b, false};
  std::vector<Permutation> gens;
  for (const auto& sigma : symmetric_index_maps(a)) {
    append_unique(gens, grid_permutation(g, [&](std::size_t i, std::size_t j) { return std::pair{sigma[i], j}; }));
  }
  for (const auto& tau : symmetric_index_maps(b)) {
    append_unique(gens, grid_permutation(g, [&](std::size_t i, std::size_t j) { return std::pair{i, tau[j]}; }));
  }
  return gens;
}

std::vector<Permutation> c2_wreath_generators(std::size_t b) {
  const GridIndex g{2, b, false};
  std::vector<Permutation> gens;
  for (const auto& tau : symmetric_index_maps(b)) {
    append_unique(gens, grid_permutation(g, [&](std::size_t i, std::size_t j) { return std::pair{i, tau[j]}; }));
  }
  append_unique(gens, grid_permutation(g, [](std::size_t i, std::size_t j) {
                  return std::pair{j == 0 ? 1 - i : i, j};
                }));
  return gens;
}

std::vector<Permutation> even_flip_wreath_generators(std::size_t b) {
  if (b < 2) throw Error(ErrorKind::InvalidArgument, "need at least two columns");
  const GridIndex g{2, b, false};
  std::vector<Permutation> gens;
  for (const auto& tau : symmetric_index_maps(b)) {
    append_unique(gens, grid_permutation(g, [&](std::size_t i, std::size_t j) { return std::pair{i, tau[j]}; }));
  }
  append_unique(gens, grid_permutation(g, [](std::size_t i, std::size_t j) {
                  return std::pair{j <= 1 ? 1 - i : i, j};
                }));
  return gens;
}

std::vector<Permutation> symwr2_generators(std::size_t a) {
  const GridIndex g{a, a, false};
  std::vector<Permutation> gens = direct_product_generators(a, a);
  append_unique(gens, grid_permutation(g, [](std::size_t i, std::size_t j) { return std::pair{j, i}; }));
  return gens;
}

std::vector<Permutation> wreath_generators(const WreathShape& shape) {
  const std::size_t length = shape.length();
  std::vector<Permutation> gens;
  for (std::size_t level = 1; level <= shape.levels(); ++level) {
    const std::size_t n = shape.degrees[level - 1];
    const std::size_t block = shape.block_size(level - 1);
    for (const auto& sigma : symmetric_index_maps(n)) {
      std::vector<Point> images(length);
      for (std::size_t x = 0; x < length; ++x) {
        const std::size_t digit = (x / block) % n;
        const bool first_block = x / (block * n) == 0;
        images[x] = static_cast<Point>(first_block ? x + (sigma[digit] - digit) * block : x);
      }
      append_unique(gens, Permutation(std::move(images)));
    }
  }
  return gens;
}

BigInt order_direct_product(std::size_t a, std::size_t b) {
  return factorial(static_cast<unsigned>(a)) * factorial(static_cast<unsigned>(b));
}

BigInt order_c2_wreath(std::size_t b) { return (BigInt(1) << b) * factorial(static_cast<unsigned>(b)); }

BigInt order_symwr2(std::size_t a) {
  const BigInt f = factorial(static_cast<unsigned>(a));
  return 2 * f * f;
}

BigInt order_iterated_wreath(const WreathShape& shape) {
  BigInt result = 1;
  for (std::size_t i = 0; i < shape.levels(); ++i) {
    std::size_t copies = 1;
    for (std::size_t j = i + 1; j < shape.levels(); ++j) copies *= shape.degrees[j];
    result *= boost::multiprecision::pow(factorial(static_cast<unsigned>(shape.degrees[i])),
                                         static_cast<unsigned>(copies));
  }
  return result;
}

BigInt order_affine(std::size_t m, std::size_t p) { return BigInt(m) * p; }

namespace {

ExpectedGroup symmetric_group(std::size_t n) {
  std::vector<Point> points(n);
  std::iota(points.begin(), points.end(), Point{0});
  return {GroupShape::Symmetric, "Sym(" + std::to_string(n) + ")", factorial(static_cast<unsigned>(n)),
          symmetric_generators(n, points)};
}

ExpectedGroup grid_group(const GridIndex& g) {
  const std::string a = std::to_string(g.a), b = std::to_string(g.b);
  if (g.a == 1) return symmetric_group(g.b);
  if (g.a == 2 && g.b == 2) return symmetric_group(4);
  if (g.a == 2) return {GroupShape::C2Wreath, "C2 wr Sym(" + b + ")", order_c2_wreath(g.b), c2_wreath_generators(g.b)};
  if (g.a == g.b) return {GroupShape::SymWreath2, "Sym(" + a + ") wr C2", order_symwr2(g.a), symwr2_generators(g.a)};
  return {GroupShape::DirectProduct, "Sym(" + a + ") x Sym(" + b + ")", order_direct_product(g.a, g.b),
          direct_product_generators(g.a, g.b)};
}

}  // namespace

std::optional<ExpectedGroup> expected_group(const CodeSource& source) {
  if (const auto* f = std::get_if<ElementaryFamily>(&source)) return symmetric_group(f->n);
  if (const auto* f = std::get_if<C0Family>(&source)) return grid_group(GridIndex::normalized(f->a, f->b));
  if (const auto* f = std::get_if<C1Family>(&source)) {
    const GridIndex g = GridIndex::normalized(f->a, f->b);
    if ((g.a + g.b) % 2 == 1) return grid_group(g);
    if (g.a == 1) return symmetric_group(g.b);
    if (g.a == 2 && g.b == 2) {
      // Preserves the diagonals {0,3} and {1,2} of the 2 x 2 grid.
      return ExpectedGroup{GroupShape::Dihedral8, "D8", 8,
                           {Permutation::from_cycles(4, {{0, 3}}), Permutation::from_cycles(4, {{0, 1}, {2, 3}})}};
    }
    if (g.a == 2) {
      return ExpectedGroup{GroupShape::EvenFlipWreath, "(C2 wr Sym(" + std::to_string(g.b) + "))+",
                           order_c2_wreath(g.b) / 2, even_flip_wreath_generators(g.b)};
    }
    return grid_group(g);
  }
  if (const auto* f = std::get_if<KFamily>(&source)) {
    if (f->shape.beyond_theorem()) return std::nullopt;
    std::string name;
    for (std::size_t n : f->shape.degrees) name += (name.empty() ? "" : " wr ") + ("Sym(" + std::to_string(n) + ")");
    return ExpectedGroup{GroupShape::IteratedWreath, name, order_iterated_wreath(f->shape),
                         wreath_generators(f->shape)};
  }
  return std::nullopt;
}

// --- regular cycles ----------------------------------------------------------

namespace {

Permutation grid_cycle_candidate(const GridIndex& g) {
  if (g.a == 1) return Permutation::shift(g.b);
  if (g.a == 2) {
    return grid_permutation(g, [&](std::size_t i, std::size_t j) {
      return j + 1 < g.b ? std::pair{i, j + 1} : std::pair{1 - i, std::size_t{0}};
    });
  }
  if (std::gcd(g.a, g.b) == 1) {
    return grid_permutation(g, [&](std::size_t i, std::size_t j) { return std::pair{(i + 1) % g.a, (j + 1) % g.b}; });
  }
  throw Error(ErrorKind::NoWitness, "no regular cycle: a = b > 2 or gcd(a, b) > 1 with a > 2");
}

// (k, w) -> (k+1, w) below the top block, (n-1, w) -> (0, previous(w)).
Permutation odometer(const WreathShape& shape) {
  std::vector<Point> images{0};
  for (std::size_t level = 1; level <= shape.levels(); ++level) {
    const std::size_t n = shape.degrees[level - 1];
    const std::size_t block = images.size();
    std::vector<Point> next(block * n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t w = 0; w < block; ++w) {
        next[k * block + w] = static_cast<Point>(k + 1 < n ? (k + 1) * block + w : images[w]);
      }
    }
    images = std::move(next);
  }
  return Permutation(std::move(images));
}

}  // namespace

Permutation regular_cycle_witness(const CodeSource& source) {
  const LinearCode code = build_code(source);
  Permutation w;
  bool must_hold = true;
  if (const auto* f = std::get_if<C0Family>(&source)) {
    w = grid_cycle_candidate(GridIndex::normalized(f->a, f->b));
  } else if (const auto* f = std::get_if<C1Family>(&source)) {
    w = grid_cycle_candidate(GridIndex::normalized(f->a, f->b));
    must_hold = false;
  } else if (const auto* f = std::get_if<KFamily>(&source)) {
    w = odometer(f->shape);
  } else if (std::holds_alternative<ExplicitCode>(source)) {
    w = Permutation::shift(code.length());
    must_hold = false;
  } else {
    w = Permutation::shift(code.length());
  }
  if (w.is_regular_cycle() && is_invariant(code, w)) return w;
  if (must_hold) throw Error(ErrorKind::Internal, "family witness failed verification for " + describe(source));
  throw Error(ErrorKind::NoWitness, "no regular-cycle witness for " + describe(source));
}

RegularCycleResult find_regular_cycle(const PermGroup& g, std::uint64_t element_cap,
                                      const std::optional<Permutation>& candidate) {
  if (candidate && candidate->degree() == g.degree() && candidate->is_regular_cycle() && g.contains(*candidate)) {
    return {CycleStatus::Found, candidate};
  }
  if (g.order() > element_cap) return {CycleStatus::Undecided, std::nullopt};
  RegularCycleResult result{CycleStatus::None, std::nullopt};
  g.for_each_element([&](const Permutation& p) {
    if (!p.is_regular_cycle()) return true;
    result = {CycleStatus::Found, p};
    return false;
  });
  return result;
}

Permutation shift_relabeling(const Permutation& w) {
  if (!w.is_regular_cycle()) throw Error(ErrorKind::InvalidArgument, "not a regular cycle");
  std::vector<Point> images(w.degree());
  Point x = 0;
  for (std::size_t t = 0; t < w.degree(); ++t) {
    images[x] = static_cast<Point>(t);
    x = w(x);
  }
  return Permutation(std::move(images));
}

LinearCode conjugate_code(const LinearCode& c, const Permutation& p) { return permute_code(c, p); }

std::optional<bool> is_cyclic_group(const PermGroup& g, std::uint64_t element_cap) {
  const BigInt order = g.order();
  if (order > element_cap) return std::nullopt;
  const auto target = static_cast<std::uint64_t>(order);
  bool cyclic = target == 1;
  if (!cyclic) {
    g.for_each_element([&](const Permutation& p) {
      cyclic = p.order() == target;
      return !cyclic;
    });
  }
  return cyclic;
}

std::uint64_t brute_force_automorphism_order(const LinearCode& c) {
  if (c.length() > 10) throw Error(ErrorKind::EnumerationInfeasible, "brute force is limited to N <= 10");
  std::vector<Point> images(c.length());
  std::iota(images.begin(), images.end(), Point{0});
  std::uint64_t count = 0;
  do {
    if (is_invariant(c, Permutation(images))) ++count;
  } while (std::next_permutation(images.begin(), images.end()));
  return count;
}

}  // namespace codeaut
