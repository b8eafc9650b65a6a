#include "codeaut/cyclic.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <random>

#include "codeaut/error.hpp"

namespace codeaut {

namespace {

constexpr std::size_t kBits = 64;

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> primes;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

void require_odd_length(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "length must be positive");
  if (n % 2 == 0) {
    throw Error(ErrorKind::NonSquarefree,
                "X^" + std::to_string(n) + " - 1 is not squarefree over GF(2); odd lengths only");
  }
}

// Polynomials with coefficients in GF(2^m), constant term first.
using ExtPoly = std::vector<GF2mElement>;

}  // namespace

// --- Poly2 -----------------------------------------------------------------

Poly2 Poly2::monomial(std::size_t exponent) {
  Poly2 p;
  p.set_coefficient(exponent, true);
  return p;
}

Poly2 Poly2::from_bits(std::uint64_t bits) {
  Poly2 p;
  if (bits != 0) p.words_.push_back(bits);
  return p;
}

Poly2 Poly2::from_bitvector(const BitVector& coefficients) {
  Poly2 p;
  p.words_.assign(coefficients.words().begin(), coefficients.words().end());
  p.normalize();
  return p;
}

Poly2 Poly2::parse(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += static_cast<char>(std::tolower(ch));
  }
  if (compact.empty()) throw Error(ErrorKind::InvalidArgument, "empty polynomial text");

  if (compact.find_first_not_of("01") == std::string::npos) {
    return from_bitvector(BitVector::parse(compact));
  }

  Poly2 result;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    const std::size_t plus = std::min(compact.find('+', pos), compact.size());
    const std::string term = compact.substr(pos, plus - pos);
    std::size_t exponent = 0;
    bool nonzero = true;
    if (term == "1") {
      exponent = 0;
    } else if (term == "0") {
      nonzero = false;
    } else if (term == "x") {
      exponent = 1;
    } else if (term.size() > 2 && term.rfind("x^", 0) == 0 &&
               term.find_first_not_of("0123456789", 2) == std::string::npos) {
      exponent = std::stoul(term.substr(2));
    } else {
      throw Error(ErrorKind::InvalidArgument, "cannot parse polynomial term '" + term + "'");
    }
    if (nonzero) result.set_coefficient(exponent, !result.coefficient(exponent));
    pos = plus + 1;
  }
  return result;
}

int Poly2::degree() const noexcept {
  if (words_.empty()) return -1;
  return static_cast<int>((words_.size() - 1) * kBits + (kBits - 1 - std::countl_zero(words_.back())));
}

bool Poly2::coefficient(std::size_t i) const noexcept {
  const std::size_t w = i / kBits;
  return w < words_.size() && ((words_[w] >> (i % kBits)) & 1U);
}

void Poly2::set_coefficient(std::size_t i, bool value) {
  const std::size_t w = i / kBits;
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  const std::uint64_t mask = std::uint64_t{1} << (i % kBits);
  if (value) {
    words_[w] |= mask;
  } else {
    words_[w] &= ~mask;
  }
  normalize();
}

BitVector Poly2::to_bitvector(std::size_t length) const {
  if (degree() >= static_cast<int>(length)) {
    throw Error(ErrorKind::LengthMismatch, "polynomial degree does not fit the requested length");
  }
  BitVector v(length);
  for (int i = 0; i <= degree(); ++i) {
    if (coefficient(static_cast<std::size_t>(i))) v.set(static_cast<std::size_t>(i));
  }
  return v;
}

std::string Poly2::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= degree(); ++i) {
    if (!coefficient(static_cast<std::size_t>(i))) continue;
    if (!s.empty()) s += '+';
    if (i == 0) {
      s += '1';
    } else if (i == 1) {
      s += 'x';
    } else {
      s += "x^" + std::to_string(i);
    }
  }
  return s;
}

std::string Poly2::to_bits() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= degree(); ++i) s += coefficient(static_cast<std::size_t>(i)) ? '1' : '0';
  return s;
}

Poly2& Poly2::operator+=(const Poly2& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] ^= other.words_[w];
  normalize();
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly2 result;
  result.words_.assign(a.words_.size() + b.words_.size(), 0);
  for (std::size_t wa = 0; wa < a.words_.size(); ++wa) {
    std::uint64_t bits = a.words_[wa];
    while (bits != 0) {
      const unsigned shift = static_cast<unsigned>(std::countr_zero(bits));
      bits &= bits - 1;
      // result ^= b << (wa*64 + shift)
      for (std::size_t wb = 0; wb < b.words_.size(); ++wb) {
        result.words_[wa + wb] ^= b.words_[wb] << shift;
        if (shift != 0) result.words_[wa + wb + 1] ^= b.words_[wb] >> (kBits - shift);
      }
    }
  }
  result.normalize();
  return result;
}

std::strong_ordering operator<=>(const Poly2& a, const Poly2& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void Poly2::normalize() noexcept {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Poly2 poly_mul(const Poly2& p, const Poly2& q) { return p * q; }

PolyDivision poly_divmod(const Poly2& p, const Poly2& q) {
  if (q.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  PolyDivision out{Poly2::zero(), p};
  const int dq = q.degree();
  while (out.remainder.degree() >= dq) {
    const std::size_t shift = static_cast<std::size_t>(out.remainder.degree() - dq);
    out.quotient.set_coefficient(shift, true);
    out.remainder += q * Poly2::monomial(shift);
  }
  return out;
}

Poly2 poly_mod(const Poly2& p, const Poly2& q) { return poly_divmod(p, q).remainder; }

Poly2 poly_gcd(Poly2 p, Poly2 q) {
  while (!q.is_zero()) {
    Poly2 r = poly_mod(p, q);
    p = std::move(q);
    q = std::move(r);
  }
  return p;  // monic automatically over GF(2)
}

Poly2 x_pow_minus_one(std::size_t n) { return Poly2::monomial(n) + Poly2::one(); }

bool is_irreducible(const Poly2& p) {
  const int m = p.degree();
  if (m < 1) return false;
  // Ben-Or: p is irreducible iff gcd(X^(2^i) - X, p) = 1 for 1 <= i <= m/2.
  const Poly2 x = Poly2::monomial(1);
  Poly2 power = poly_mod(x, p);
  for (int i = 1; i <= m / 2; ++i) {
    power = poly_mod(power * power, p);
    if (poly_gcd(p, power + x).degree() != 0) return false;
  }
  return true;
}

Poly2 find_irreducible(unsigned m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "field extension degree must be positive");
  const Poly2 leading = Poly2::monomial(m);
  for (std::uint64_t low = 0;; ++low) {
    if (m < 64 && low >= (std::uint64_t{1} << m)) break;
    Poly2 candidate = leading + Poly2::from_bits(low);
    if (is_irreducible(candidate)) return candidate;
  }
  throw Error(ErrorKind::Internal, "no irreducible polynomial found");
}

// --- GF(2^m) ---------------------------------------------------------------

GF2m::GF2m(unsigned m) : m_(m), modulus_(find_irreducible(m)) {}

GF2m::GF2m(Poly2 modulus) : m_(0), modulus_(std::move(modulus)) {
  if (!is_irreducible(modulus_)) {
    throw Error(ErrorKind::InvalidArgument, "defining polynomial " + modulus_.to_string() + " is reducible");
  }
  m_ = static_cast<unsigned>(modulus_.degree());
}

GF2mElement GF2m::mul(const GF2mElement& a, const GF2mElement& b) const {
  return {poly_mod(a.value * b.value, modulus_)};
}

GF2mElement GF2m::pow(const GF2mElement& a, const BigInt& exponent) const {
  GF2mElement result = one();
  if (exponent == 0) return result;
  const auto top = boost::multiprecision::msb(exponent);
  for (auto bit = top + 1; bit-- > 0;) {
    result = mul(result, result);
    if (boost::multiprecision::bit_test(exponent, bit)) result = mul(result, a);
  }
  return result;
}

BigInt GF2m::multiplicative_group_order() const { return (BigInt(1) << m_) - 1; }

// --- cosets and factorization ----------------------------------------------

CosetSystem cyclotomic_cosets(std::size_t n) {
  require_odd_length(n);
  CosetSystem system{n, {}};
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> coset;
    for (std::size_t x = start; !seen[x]; x = (2 * x) % n) {
      seen[x] = true;
      coset.push_back(x);
    }
    system.cosets.push_back(std::move(coset));
  }
  return system;
}

unsigned multiplicative_order_of_two(std::size_t n) {
  require_odd_length(n);
  if (n == 1) return 1;
  unsigned order = 1;
  for (std::size_t x = 2 % n; x != 1; x = (2 * x) % n) ++order;
  return order;
}

Factorization factor_cyclotomic(std::size_t n, std::uint64_t seed) {
  require_odd_length(n);
  const unsigned m = multiplicative_order_of_two(n);
  const GF2m field(m);
  const BigInt cofactor = field.multiplicative_group_order() / n;
  const auto primes = prime_divisors(n);

  // A primitive N-th root of unity: beta^((2^m-1)/N) for random nonzero beta,
  // accepted once its order is exactly N.
  std::mt19937_64 rng(seed);
  GF2mElement alpha;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 10000) throw Error(ErrorKind::Internal, "no root of unity of order " + std::to_string(n));
    Poly2 beta;
    for (unsigned i = 0; i < m; ++i) {
      if (rng() & 1U) beta.set_coefficient(i, true);
    }
    if (beta.is_zero()) continue;
    alpha = field.pow(field.element(beta), cofactor);
    bool exact = true;
    for (std::size_t q : primes) {
      if (field.pow(alpha, BigInt(n / q)) == field.one()) {
        exact = false;
        break;
      }
    }
    if (exact) break;
  }

  Factorization result;
  result.modulus = n;
  result.extension_degree = m;
  result.field_modulus = field.modulus();

  const CosetSystem cosets = cyclotomic_cosets(n);
  for (const auto& coset : cosets.cosets) {
    ExtPoly minimal{field.one()};
    for (std::size_t i : coset) {
      const GF2mElement root = field.pow(alpha, BigInt(i));
      // minimal *= (X + root)
      ExtPoly next(minimal.size() + 1, field.zero());
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        next[j + 1] = field.add(next[j + 1], minimal[j]);
        next[j] = field.add(next[j], field.mul(minimal[j], root));
      }
      minimal = std::move(next);
    }
    Poly2 factor;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (minimal[j] == field.one()) {
        factor.set_coefficient(j, true);
      } else if (!(minimal[j] == field.zero())) {
        throw Error(ErrorKind::Internal, "minimal polynomial has a coefficient outside GF(2)");
      }
    }
    result.factors.push_back({std::move(factor), coset});
  }

  Poly2 product = Poly2::one();
  for (const auto& f : result.factors) product = product * f.polynomial;
  if (!(product == x_pow_minus_one(n))) {
    throw Error(ErrorKind::Internal, "factors do not multiply to X^N - 1");
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const CyclotomicFactor& a, const CyclotomicFactor& b) { return a.polynomial < b.polynomial; });
  return result;
}

// --- cyclic codes ------------------------------------------------------------

LinearCode cyclic_code_from_gen(std::size_t n, const Poly2& generator) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "length must be positive");
  if (generator.is_zero() || !poly_mod(x_pow_minus_one(n), generator).is_zero()) {
    throw Error(ErrorKind::NotADivisor,
                generator.to_string() + " does not divide X^" + std::to_string(n) + " - 1");
  }
  const std::size_t deg = static_cast<std::size_t>(generator.degree());
  std::vector<BitVector> rows;
  for (std::size_t i = 0; i + deg < n; ++i) {
    rows.push_back((generator * Poly2::monomial(i)).to_bitvector(n));
  }
  return LinearCode(n, rows);
}

std::vector<EnumeratedCyclicCode> enumerate_cyclic_codes(std::size_t n, std::size_t max_factors,
                                                         std::uint64_t seed) {
  const Factorization f = factor_cyclotomic(n, seed);
  const std::size_t count = f.factors.size();
  if (count > max_factors || count >= 63) {
    throw Error(ErrorKind::EnumerationInfeasible,
                std::to_string(count) + " irreducible factors exceed the cap of " + std::to_string(max_factors));
  }
  std::vector<EnumeratedCyclicCode> codes;
  codes.reserve(std::size_t{1} << count);
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << count); ++subset) {
    EnumeratedCyclicCode entry;
    entry.subset = subset;
    entry.generator = Poly2::one();
    for (std::size_t j = 0; j < count; ++j) {
      if ((subset >> j) & 1U) {
        entry.factor_indices.push_back(j);
        entry.generator = entry.generator * f.factors[j].polynomial;
      }
    }
    entry.code = cyclic_code_from_gen(n, entry.generator);
    codes.push_back(std::move(entry));
  }
  return codes;
}

bool is_shift_invariant(const LinearCode& c) {
  if (c.length() == 0) return true;
  return is_invariant(c, Permutation::shift(c.length()));
}

}  // namespace codeaut
