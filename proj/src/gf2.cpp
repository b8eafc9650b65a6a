#include "codeaut/gf2.hpp"

#include <algorithm>
#include <bit>

#include "codeaut/error.hpp"

namespace codeaut {

namespace {

std::size_t words_for(std::size_t length) {
  return (length + BitVector::kWordBits - 1) / BitVector::kWordBits;
}

void require_same_length(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch, "bit vectors of length " + std::to_string(a.size()) +
                                               " and " + std::to_string(b.size()));
  }
}

}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
  if (index >= length) throw Error(ErrorKind::InvalidArgument, "unit vector index out of range");
  BitVector v(length);
  v.set(index);
  return v;
}

BitVector BitVector::ones(std::size_t length) {
  BitVector v(length);
  std::fill(v.words_.begin(), v.words_.end(), ~Word{0});
  v.trim();
  return v;
}

BitVector BitVector::parse(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw Error(ErrorKind::InvalidArgument, "bit string may only contain 0 and 1");
    }
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) noexcept {
  const Word mask = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

std::size_t BitVector::weight() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::optional<std::size_t> BitVector::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> result;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word bits = words_[w];
    while (bits != 0) {
      result.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return result;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_length(*this, other);
  xor_assign_unchecked(other);
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_length(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  require_same_length(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector result = *this;
  for (Word& w : result.words_) w = ~w;
  result.trim();
  return result;
}

bool BitVector::is_subset_of(const BitVector& other) const {
  require_same_length(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    if (a.words_[w] == b.words_[w]) continue;
    // Coordinate 0 is the most significant: compare at the lowest differing bit.
    const BitVector::Word diff = a.words_[w] ^ b.words_[w];
    const BitVector::Word low = diff & (~diff + 1);
    return (a.words_[w] & low) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

void BitVector::trim() noexcept {
  const std::size_t tail = length_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

std::size_t BitVectorHash::operator()(const BitVector& v) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
  for (auto w : v.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

BitMatrix::BitMatrix(std::size_t ncols, std::vector<BitVector> rows) : ncols_(ncols) {
  rows_.reserve(rows.size());
  for (auto& r : rows) push_back(std::move(r));
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.push_back(BitVector::unit(n, i));
  return m;
}

void BitMatrix::push_back(BitVector row) {
  if (row.size() != ncols_) {
    throw Error(ErrorKind::LengthMismatch, "row of length " + std::to_string(row.size()) +
                                               " in matrix with " + std::to_string(ncols_) + " columns");
  }
  rows_.push_back(std::move(row));
}

Rref rref(const BitMatrix& m) {
  std::vector<BitVector> rows = m.rows();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.ncols() && next < rows.size(); ++col) {
    std::size_t found = next;
    while (found < rows.size() && !rows[found].test(col)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].test(col)) rows[r].xor_assign_unchecked(rows[next]);
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  return Rref{BitMatrix(m.ncols(), std::move(rows)), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

BitVector reduce(const BitMatrix& rref_basis, std::span<const std::size_t> pivots, BitVector v) {
  if (v.size() != rref_basis.ncols()) {
    throw Error(ErrorKind::LengthMismatch, "vector length does not match basis");
  }
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (v.test(pivots[r])) v.xor_assign_unchecked(rref_basis.rows()[r]);
  }
  return v;
}

bool in_span(const BitMatrix& rref_basis, const BitVector& v) {
  if (v.size() != rref_basis.ncols()) {
    throw Error(ErrorKind::LengthMismatch, "vector length does not match basis");
  }
  BitVector rest = v;
  for (const auto& row : rref_basis.rows()) {
    const auto pivot = row.first_set();
    if (pivot && rest.test(*pivot)) rest.xor_assign_unchecked(row);
  }
  return rest.none();
}

BitMatrix null_space(const BitMatrix& m) {
  const Rref r = rref(m);
  const std::size_t n = m.ncols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;

  BitMatrix kernel(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    BitVector v(n);
    v.set(free);
    for (std::size_t row = 0; row < r.pivots.size(); ++row) {
      if (r.basis.rows()[row].test(free)) v.set(r.pivots[row]);
    }
    kernel.push_back(std::move(v));
  }
  return rref(kernel).basis;
}

}  // namespace codeaut
