#pragma once

// Bit-packed linear algebra over GF(2).
//
// Coordinates are 0-indexed. The text form of a vector is a plain 0/1
// string with coordinate 0 leftmost; it does not depend on the word size
// used for packing.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace codeaut {

class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length);

  static BitVector unit(std::size_t length, std::size_t index);
  static BitVector ones(std::size_t length);
  /// Parses a 0/1 string, coordinate 0 first. Throws InvalidArgument on other characters.
  static BitVector parse(std::string_view bits);

  std::size_t size() const noexcept { return length_; }
  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i, bool value = true) noexcept;
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t weight() const noexcept;
  bool none() const noexcept;
  bool any() const noexcept { return !none(); }

  /// Index of the lowest set coordinate, if any.
  std::optional<std::size_t> first_set() const noexcept;
  std::vector<std::size_t> support() const;

  // The binary operators require equal lengths and throw LengthMismatch otherwise.
  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }
  friend BitVector operator|(BitVector lhs, const BitVector& rhs) { return lhs |= rhs; }
  BitVector operator~() const;

  /// Unchecked in-place xor for hot loops; lengths must already agree.
  void xor_assign_unchecked(const BitVector& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  }

  bool is_subset_of(const BitVector& other) const;

  std::span<const Word> words() const noexcept { return words_; }

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  /// Total order: by length, then coordinate-wise with coordinate 0 most significant.
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

 private:
  void trim() noexcept;

  std::size_t length_ = 0;
  std::vector<Word> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t ncols) : ncols_(ncols) {}
  BitMatrix(std::size_t ncols, std::vector<BitVector> rows);

  static BitMatrix identity(std::size_t n);

  std::size_t ncols() const noexcept { return ncols_; }
  std::size_t nrows() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  const std::vector<BitVector>& rows() const noexcept { return rows_; }
  const BitVector& row(std::size_t i) const { return rows_.at(i); }

  void push_back(BitVector row);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t ncols_ = 0;
  std::vector<BitVector> rows_;
};

struct Rref {
  BitMatrix basis;                  // zero rows removed
  std::vector<std::size_t> pivots;  // strictly increasing, one per basis row
};

/// Reduced row echelon form; the result is the canonical basis of the row space.
Rref rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

/// True iff v is a sum of rows of m. m must be in reduced row echelon form.
bool in_span(const BitMatrix& rref_basis, const BitVector& v);

/// Reduces v by the pivots of an RREF basis; the result is zero iff v is in the span.
BitVector reduce(const BitMatrix& rref_basis, std::span<const std::size_t> pivots, BitVector v);

/// RREF basis of { v : m v^T = 0 }.
BitMatrix null_space(const BitMatrix& m);

}  // namespace codeaut
