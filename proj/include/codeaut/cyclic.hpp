#pragma once

// Cyclic codes: GF(2)[X] arithmetic, the fields GF(2^m), 2-cyclotomic
// cosets and the factorization of X^N - 1 for odd N.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "codeaut/bigint.hpp"
#include "codeaut/code.hpp"
#include "codeaut/gf2.hpp"

namespace codeaut {

/// A polynomial over GF(2); bit i of the packed words is the coefficient of X^i.
class Poly2 {
 public:
  Poly2() = default;

  static Poly2 zero() { return {}; }
  static Poly2 one() { return monomial(0); }
  static Poly2 monomial(std::size_t exponent);
  /// Bit i of `bits` is the coefficient of X^i.
  static Poly2 from_bits(std::uint64_t bits);
  static Poly2 from_bitvector(const BitVector& coefficients);
  /// Accepts "1+x+x^3" style (also "X", "x^0", "0") or a raw 0/1 string with
  /// the constant coefficient first ("1101" = 1 + x + x^3).
  static Poly2 parse(std::string_view text);

  /// -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_zero() const noexcept { return words_.empty(); }
  bool coefficient(std::size_t i) const noexcept;
  void set_coefficient(std::size_t i, bool value);

  /// Coefficients as a length-`length` vector (coefficient of X^i at position i).
  BitVector to_bitvector(std::size_t length) const;
  std::string to_string() const;  // "1+x+x^3"
  std::string to_bits() const;    // "1101"

  Poly2& operator+=(const Poly2& other);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);

  friend bool operator==(const Poly2&, const Poly2&) = default;
  /// By degree, then by coefficients from the leading term down.
  friend std::strong_ordering operator<=>(const Poly2& a, const Poly2& b);

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  void normalize() noexcept;

  std::vector<std::uint64_t> words_;
};

struct PolyDivision {
  Poly2 quotient;
  Poly2 remainder;
};

Poly2 poly_mul(const Poly2& p, const Poly2& q);
/// Throws InvalidArgument on division by zero.
PolyDivision poly_divmod(const Poly2& p, const Poly2& q);
Poly2 poly_mod(const Poly2& p, const Poly2& q);
/// Monic gcd (zero only if both inputs are zero).
Poly2 poly_gcd(Poly2 p, Poly2 q);
/// X^N - 1 (= X^N + 1 over GF(2)).
Poly2 x_pow_minus_one(std::size_t n);

/// Least irreducible polynomial of degree m, in the order of Poly2 (so X for
/// m = 1 and X^3+X+1 for m = 3).
Poly2 find_irreducible(unsigned m);
bool is_irreducible(const Poly2& p);

/// An element of GF(2^m), stored reduced modulo the field's defining polynomial.
struct GF2mElement {
  Poly2 value;
  friend bool operator==(const GF2mElement&, const GF2mElement&) = default;
};

class GF2m {
 public:
  /// Uses find_irreducible(m) as the defining polynomial.
  explicit GF2m(unsigned m);
  /// Throws InvalidArgument unless `modulus` is irreducible.
  explicit GF2m(Poly2 modulus);

  unsigned degree() const noexcept { return m_; }
  const Poly2& modulus() const noexcept { return modulus_; }

  GF2mElement zero() const { return {}; }
  GF2mElement one() const { return {Poly2::one()}; }
  GF2mElement element(const Poly2& value) const { return {poly_mod(value, modulus_)}; }

  GF2mElement add(const GF2mElement& a, const GF2mElement& b) const { return {a.value + b.value}; }
  GF2mElement mul(const GF2mElement& a, const GF2mElement& b) const;
  GF2mElement pow(const GF2mElement& a, const BigInt& exponent) const;
  /// 2^m - 1.
  BigInt multiplicative_group_order() const;

 private:
  unsigned m_;
  Poly2 modulus_;
};

/// Partition of Z_N into orbits of multiplication by 2.
struct CosetSystem {
  std::size_t modulus = 0;
  /// Ordered by least element; each coset listed as i, 2i, 4i, ... mod N.
  std::vector<std::vector<std::size_t>> cosets;
};

/// Throws NonSquarefree for even N and InvalidArgument for N = 0.
CosetSystem cyclotomic_cosets(std::size_t n);

/// Multiplicative order of 2 modulo odd N (1 for N = 1).
unsigned multiplicative_order_of_two(std::size_t n);

struct CyclotomicFactor {
  Poly2 polynomial;
  std::vector<std::size_t> coset;
};

struct Factorization {
  std::size_t modulus = 0;
  unsigned extension_degree = 0;  // m with N | 2^m - 1
  Poly2 field_modulus;
  /// Irreducible factors of X^N - 1 sorted by Poly2 order, each with the
  /// cyclotomic coset of its roots (relative to the chosen root of unity).
  std::vector<CyclotomicFactor> factors;
};

/// Factors X^N - 1 over GF(2) by computing the minimal polynomial of every
/// coset of a primitive N-th root of unity in GF(2^m). The root is found from
/// a seeded random search; the set of factors does not depend on the seed.
Factorization factor_cyclotomic(std::size_t n, std::uint64_t seed = 0x5eed);

/// The code spanned by g, Xg, ..., X^(N-deg g-1) g.
/// Throws NotADivisor unless g divides X^N - 1.
LinearCode cyclic_code_from_gen(std::size_t n, const Poly2& generator);

struct EnumeratedCyclicCode {
  std::uint64_t subset = 0;                 // bit j selects factor j
  std::vector<std::size_t> factor_indices;  // chosen factors
  Poly2 generator;                          // product of the chosen factors
  LinearCode code;
};

/// One code per subset of the irreducible factors, subsets in binary order.
/// Throws EnumerationInfeasible when the factor count exceeds `max_factors`.
std::vector<EnumeratedCyclicCode> enumerate_cyclic_codes(std::size_t n, std::size_t max_factors = 20,
                                                         std::uint64_t seed = 0x5eed);

/// Invariance under i -> i+1 mod N.
bool is_shift_invariant(const LinearCode& c);

}  // namespace codeaut
