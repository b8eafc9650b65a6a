#pragma once

// Permutation groups via base and strong generating set, the automorphism
// group of a binary code, regular-cycle witnesses, and the generators and
// orders of the groups attached to the code families.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "codeaut/bigint.hpp"
#include "codeaut/code.hpp"
#include "codeaut/families.hpp"
#include "codeaut/permutation.hpp"

namespace codeaut {

/// A subgroup of Sym(N) with a stabilizer chain built by deterministic
/// Schreier-Sims. Immutable after construction.
class PermGroup {
 public:
  using Point = Permutation::Point;

  PermGroup() = default;
  /// Identity generators are dropped; every generator must have degree N.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Point>& base() const noexcept { return base_; }
  const std::vector<Permutation>& strong_generators() const noexcept { return strong_; }
  /// Basic orbit sizes, one per base point.
  std::vector<std::size_t> orbit_sizes() const;

  BigInt order() const;
  bool contains(const Permutation& p) const;
  bool contains_all(const std::vector<Permutation>& ps) const;

  /// Calls visit on every element once, in a fixed order, stopping early
  /// when visit returns false. Returns false iff stopped early.
  bool for_each_element(const std::function<bool(const Permutation&)>& visit) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;            // strong generators fixing earlier base points
    std::vector<std::int32_t> transversal_index;    // point -> index into reps, -1 if outside orbit
    std::vector<Point> orbit;
    std::vector<Permutation> reps;                  // reps[t] maps base_point to orbit[t]
    std::vector<Permutation> inverse_reps;
  };

  void schreier_sims();
  void rebuild_orbit(Level& level) const;
  /// Strips p through levels [from, end); returns the residue and the level it stopped at.
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Point> base_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

/// Same as the PermGroup constructor.
PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators);

// --- named groups ------------------------------------------------------------

/// Sym on the listed points (a transposition and a full cycle), as
/// permutations of degree N. Empty for fewer than two points.
std::vector<Permutation> symmetric_generators(std::size_t degree, const std::vector<Permutation::Point>& points);
/// Sym(a) x Sym(b) acting on rows and columns of the a x b grid.
std::vector<Permutation> direct_product_generators(std::size_t a, std::size_t b);
/// C2 wr Sym(b) on the 2 x b grid: permute columns, flip a single column.
std::vector<Permutation> c2_wreath_generators(std::size_t b);
/// Sym(a) wr C2 on the a x a grid: Sym(a) x Sym(a) plus transposition of the grid.
std::vector<Permutation> symwr2_generators(std::size_t a);
/// The index-2 subgroup of C2 wr Sym(b) (b even) with an even number of flipped columns.
std::vector<Permutation> even_flip_wreath_generators(std::size_t b);
/// Iterated wreath Sym(n1) wr ... wr Sym(nr) in the mixed-radix flattening.
std::vector<Permutation> wreath_generators(const WreathShape& shape);

BigInt order_direct_product(std::size_t a, std::size_t b);   // a! b!
BigInt order_c2_wreath(std::size_t b);                       // 2^b b!
BigInt order_symwr2(std::size_t a);                          // 2 (a!)^2
BigInt order_iterated_wreath(const WreathShape& shape);      // prod (n_i!)^(n_{i+1}...n_r)
BigInt order_affine(std::size_t m, std::size_t p);           // m p

enum class GroupShape { Symmetric, DirectProduct, C2Wreath, EvenFlipWreath, SymWreath2, Dihedral8, IteratedWreath };

/// The automorphism group a family member is known to have, with generators
/// in the code's own coordinates.
struct ExpectedGroup {
  GroupShape shape;
  std::string name;  // "Sym(3) x Sym(4)", ...
  BigInt order;
  std::vector<Permutation> generators;
};

/// Known Aut for C0, C1, K (degrees all odd and >= 3) and the elementary
/// codes; nullopt otherwise.
std::optional<ExpectedGroup> expected_group(const CodeSource& source);

// --- regular cycles ----------------------------------------------------------

/// A regular N-cycle in the automorphism group of a family member, built from
/// the family structure and verified (regular and leaving the code invariant).
/// Throws NoWitness when the family admits none.
Permutation regular_cycle_witness(const CodeSource& source);

enum class CycleStatus { Found, None, Undecided };

struct RegularCycleResult {
  CycleStatus status = CycleStatus::Undecided;
  std::optional<Permutation> cycle;
};

/// Searches g for a single N-cycle. A supplied candidate that is a regular
/// cycle in g is returned directly; otherwise the elements are enumerated,
/// which needs |g| <= element_cap (else Undecided).
RegularCycleResult find_regular_cycle(const PermGroup& g, std::uint64_t element_cap = 10'000'000,
                                      const std::optional<Permutation>& candidate = std::nullopt);

/// The relabeling rho with rho(w^t(0)) = t; conjugating by it turns the
/// regular cycle w into the standard shift. Throws InvalidArgument if w is not
/// a regular cycle.
Permutation shift_relabeling(const Permutation& w);

/// Relabels coordinates by p (same as permute_code).
LinearCode conjugate_code(const LinearCode& c, const Permutation& p);

/// True iff g is cyclic: some element has order |g|. Enumerates up to element_cap
/// elements; nullopt when |g| exceeds the cap.
std::optional<bool> is_cyclic_group(const PermGroup& g, std::uint64_t element_cap = 10'000'000);

// --- automorphism groups -----------------------------------------------------

struct AutOptions {
  EnumerationLimits limits;
  /// Wall-clock budget for the search; exceeded -> BudgetExceeded.
  std::optional<std::chrono::milliseconds> time_budget;
};

struct AutReport {
  PermGroup group;
  bool via_dual = false;                  // the spanning set was taken from the dual code
  std::vector<std::size_t> weights_used;  // weight classes forming the invariant spanning set
  std::vector<std::size_t> class_sizes;   // their sizes, same order
  std::uint64_t nodes = 0;                // refinement calls in the backtrack search
  std::chrono::duration<double> elapsed{};
};

/// Aut(c) as the setwise stabilizer of an invariant spanning set of codewords
/// of c, or of its dual when that is smaller.
/// Throws EnumerationInfeasible when the spanning set cannot be enumerated and
/// BudgetExceeded when the time budget runs out.
AutReport automorphism_group(const LinearCode& c, const AutOptions& options = {});

/// |Aut(c)| by testing all N! permutations (N <= 10).
std::uint64_t brute_force_automorphism_order(const LinearCode& c);

}  // namespace codeaut
