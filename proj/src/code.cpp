#include "codeaut/code.hpp"

#include <bit>
#include <limits>

#include "codeaut/error.hpp"

namespace codeaut {

namespace {

void check_enumerable(std::size_t dimension, const EnumerationLimits& limits) {
  if (dimension >= 63 || (std::uint64_t{1} << dimension) > limits.codeword_cap) {
    throw Error(ErrorKind::EnumerationInfeasible,
                "2^" + std::to_string(dimension) + " codewords exceed the enumeration cap of " +
                    std::to_string(limits.codeword_cap));
  }
}

// Weight histogram by direct enumeration (caller has checked the cap).
std::vector<std::uint64_t> enumerate_weights(const LinearCode& c) {
  std::vector<std::uint64_t> counts(c.length() + 1, 0);
  const auto& rows = c.basis().rows();
  const std::size_t k = rows.size();
  const std::uint64_t total = std::uint64_t{1} << k;

  if (c.length() <= BitVector::kWordBits) {
    std::vector<std::uint64_t> packed(k);
    for (std::size_t i = 0; i < k; ++i) packed[i] = rows[i].words().empty() ? 0 : rows[i].words()[0];
    std::uint64_t word = 0;
    counts[0] = 1;
    for (std::uint64_t i = 1; i < total; ++i) {
      word ^= packed[static_cast<std::size_t>(std::countr_zero(i))];
      ++counts[static_cast<std::size_t>(std::popcount(word))];
    }
    return counts;
  }

  BitVector word(c.length());
  counts[0] = 1;
  for (std::uint64_t i = 1; i < total; ++i) {
    word.xor_assign_unchecked(rows[static_cast<std::size_t>(std::countr_zero(i))]);
    ++counts[word.weight()];
  }
  return counts;
}

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  BigInt result = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

}  // namespace

LinearCode::LinearCode(std::size_t length, const std::vector<BitVector>& generators)
    : LinearCode(BitMatrix(length, generators)) {}

LinearCode::LinearCode(const BitMatrix& generators) : length_(generators.ncols()) {
  Rref r = rref(generators);
  basis_ = std::move(r.basis);
  pivots_ = std::move(r.pivots);
}

LinearCode LinearCode::full(std::size_t length) { return LinearCode(BitMatrix::identity(length)); }

bool LinearCode::contains(const BitVector& v) const {
  if (v.size() != length_) throw Error(ErrorKind::LengthMismatch, "vector length differs from code length");
  return reduce(basis_, pivots_, v).none();
}

std::size_t weight(const BitVector& v) { return v.weight(); }

std::vector<std::size_t> support(const BitVector& v) { return v.support(); }

std::size_t common_weight(const BitVector& v, const BitVector& w) { return (v & w).weight(); }

std::size_t coweight(const BitVector& v) { return v.size() - v.weight(); }

void for_each_codeword(const LinearCode& c, const std::function<void(const BitVector&)>& visit,
                       const EnumerationLimits& limits) {
  check_enumerable(c.dimension(), limits);
  const auto& rows = c.basis().rows();
  const std::uint64_t total = std::uint64_t{1} << rows.size();
  BitVector word(c.length());
  visit(word);
  for (std::uint64_t i = 1; i < total; ++i) {
    word.xor_assign_unchecked(rows[static_cast<std::size_t>(std::countr_zero(i))]);
    visit(word);
  }
}

std::vector<BigInt> weight_distribution(const LinearCode& c, const EnumerationLimits& limits) {
  const std::size_t n = c.length();
  const std::size_t k = c.dimension();
  std::vector<BigInt> result(n + 1);

  if (k <= n - k) {
    check_enumerable(k, limits);
    const auto counts = enumerate_weights(c);
    for (std::size_t w = 0; w <= n; ++w) result[w] = counts[w];
    return result;
  }

  // MacWilliams: A_w = 2^-(N-k) * sum_j B_j K_w(j), B the dual distribution.
  check_enumerable(n - k, limits);
  const auto dual_counts = enumerate_weights(dual(c));
  std::vector<std::vector<BigInt>> choose(n + 1, std::vector<BigInt>(n + 1));
  for (std::size_t a = 0; a <= n; ++a) {
    for (std::size_t b = 0; b <= a; ++b) choose[a][b] = binomial(a, b);
  }
  const BigInt scale = BigInt(1) << (n - k);
  for (std::size_t w = 0; w <= n; ++w) {
    BigInt sum = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      if (dual_counts[j] == 0) continue;
      BigInt kraw = 0;
      for (std::size_t s = 0; s <= std::min(j, w); ++s) {
        if (w - s > n - j) continue;
        const BigInt term = choose[j][s] * choose[n - j][w - s];
        if (s % 2 == 0) {
          kraw += term;
        } else {
          kraw -= term;
        }
      }
      sum += kraw * dual_counts[j];
    }
    if (sum % scale != 0 || sum < 0) {
      throw Error(ErrorKind::Internal, "MacWilliams transform produced a non-integral count");
    }
    result[w] = sum / scale;
  }
  return result;
}

WeightSpectrum weight_spectrum(const LinearCode& c, const EnumerationLimits& limits) {
  const auto dist = weight_distribution(c, limits);
  WeightSpectrum spectrum;
  for (std::size_t w = 0; w < dist.size(); ++w) {
    if (dist[w] != 0) spectrum.insert(w);
  }
  return spectrum;
}

std::size_t min_distance(const LinearCode& c, const EnumerationLimits& limits) {
  if (c.dimension() == 0) throw Error(ErrorKind::Empty, "the zero code has no minimum distance");
  const auto spectrum = weight_spectrum(c, limits);
  return *std::next(spectrum.begin());
}

std::size_t min_codistance(const LinearCode& c, const EnumerationLimits& limits) {
  if (c.dimension() == 0) return c.length();
  const auto spectrum = weight_spectrum(c, limits);
  return c.length() - *spectrum.rbegin();
}

LinearCode dual(const LinearCode& c) { return LinearCode(null_space(c.basis())); }

bool is_indecomposable(const LinearCode& c, const BitVector& v) {
  if (v.none()) throw Error(ErrorKind::Empty, "the zero vector is not indecomposable");
  if (!c.contains(v)) throw Error(ErrorKind::NotInCode, "vector is not a codeword");
  // Codewords supported inside supp(v) form the kernel of the projection
  // onto the complement of supp(v).
  const BitVector outside = ~v;
  BitMatrix projected(c.length());
  for (const auto& row : c.basis().rows()) projected.push_back(row & outside);
  const std::size_t shortened_dimension = c.dimension() - rank(projected);
  return shortened_dimension == 1;
}

BitVector apply_permutation(const BitVector& v, const Permutation& p) {
  if (v.size() != p.degree()) throw Error(ErrorKind::LengthMismatch, "permutation degree differs from length");
  BitVector result(v.size());
  for (std::size_t x : v.support()) result.set(p(static_cast<Permutation::Point>(x)));
  return result;
}

bool is_invariant(const LinearCode& c, const Permutation& p) {
  if (c.length() != p.degree()) throw Error(ErrorKind::LengthMismatch, "permutation degree differs from length");
  for (const auto& row : c.basis().rows()) {
    if (!c.syndrome_residue(apply_permutation(row, p)).none()) return false;
  }
  return true;
}

LinearCode permute_code(const LinearCode& c, const Permutation& p) {
  std::vector<BitVector> rows;
  rows.reserve(c.dimension());
  for (const auto& row : c.basis().rows()) rows.push_back(apply_permutation(row, p));
  return LinearCode(c.length(), rows);
}

}  // namespace codeaut
