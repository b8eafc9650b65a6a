#pragma once

// Binary linear codes and their weight metrics.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "codeaut/bigint.hpp"
#include "codeaut/gf2.hpp"
#include "codeaut/permutation.hpp"

namespace codeaut {

/// Limits on exhaustive codeword enumeration. Exceeding them is an
/// "enumeration-infeasible" error, never a silent truncation.
struct EnumerationLimits {
  std::uint64_t codeword_cap = std::uint64_t{1} << 26;
};

/// A subspace of GF(2)^N, stored by its canonical (RREF) basis.
///
/// Two codes are equal iff their canonical bases are bitwise equal.
class LinearCode {
 public:
  LinearCode() = default;
  /// Spans the given vectors; they may be dependent.
  LinearCode(std::size_t length, const std::vector<BitVector>& generators);
  explicit LinearCode(const BitMatrix& generators);

  static LinearCode zero(std::size_t length) { return LinearCode(length, {}); }
  static LinearCode full(std::size_t length);

  std::size_t length() const noexcept { return length_; }
  std::size_t dimension() const noexcept { return basis_.nrows(); }
  const BitMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const BitVector& v) const;
  /// Reduces v modulo the code; zero iff v is a codeword.
  BitVector syndrome_residue(BitVector v) const { return reduce(basis_, pivots_, std::move(v)); }

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.length_ == b.length_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t length_ = 0;
  BitMatrix basis_;
  std::vector<std::size_t> pivots_;
};

using WeightSpectrum = std::set<std::size_t>;

std::size_t weight(const BitVector& v);
std::vector<std::size_t> support(const BitVector& v);
std::size_t common_weight(const BitVector& v, const BitVector& w);
std::size_t coweight(const BitVector& v);

/// Visits every codeword once in Gray-code order (2^k calls).
/// Throws EnumerationInfeasible when 2^k exceeds the cap.
void for_each_codeword(const LinearCode& c, const std::function<void(const BitVector&)>& visit,
                       const EnumerationLimits& limits = {});

/// Number of codewords of each weight 0..N.
///
/// Enumerates whichever of the code and its dual is smaller and applies the
/// MacWilliams transform when the dual was enumerated; the cap bounds
/// 2^min(k, N-k).
std::vector<BigInt> weight_distribution(const LinearCode& c, const EnumerationLimits& limits = {});

WeightSpectrum weight_spectrum(const LinearCode& c, const EnumerationLimits& limits = {});

/// Least nonzero weight. Throws Empty for the zero code.
std::size_t min_distance(const LinearCode& c, const EnumerationLimits& limits = {});

/// Least co-weight N - wt(v) over all codewords; the zero code gives N.
std::size_t min_codistance(const LinearCode& c, const EnumerationLimits& limits = {});

LinearCode dual(const LinearCode& c);

/// True iff v cannot be split as w1 + w2 with nonzero codewords of disjoint support.
///
/// Over GF(2) such a split exists iff the shortening of c to supp(v) contains
/// a codeword other than 0 and v, so this is a rank computation.
/// Throws NotInCode if v is not a codeword and Empty if v is zero.
bool is_indecomposable(const LinearCode& c, const BitVector& v);

/// result[p(w)] = v[w].
BitVector apply_permutation(const BitVector& v, const Permutation& p);

/// True iff p maps the code onto itself.
bool is_invariant(const LinearCode& c, const Permutation& p);

/// Relabels coordinates: the codeword v becomes apply_permutation(v, p).
LinearCode permute_code(const LinearCode& c, const Permutation& p);

}  // namespace codeaut
