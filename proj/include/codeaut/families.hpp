#pragma once

// Constructors for the explicit code families: elementary codes, the grid
// codes C0(a,b) and C1(a,b), the recursive codes K(n1,...,nr), and the
// Hamming and Golay codes obtained from cyclotomic factors.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "codeaut/code.hpp"
#include "codeaut/cyclic.hpp"

namespace codeaut {

/// An a x b grid flattened row-major: (i, j) -> i*b + j, 0-indexed.
struct GridIndex {
  std::size_t a = 1;  // rows, a <= b after normalization
  std::size_t b = 1;  // columns
  bool swapped = false;

  /// Transposes (rows, cols) if needed so that a <= b, recording the swap.
  static GridIndex normalized(std::size_t rows, std::size_t cols);

  std::size_t size() const noexcept { return a * b; }
  std::size_t flatten(std::size_t i, std::size_t j) const noexcept { return i * b + j; }
};

/// Degrees (n1, ..., nr) of an iterated construction on n1*...*nr points.
///
/// Points are mixed-radix numbers with the level-1 digit varying fastest:
/// the point (k_r, ..., k_1) has index sum_i k_i * n1*...*n_{i-1}.
struct WreathShape {
  std::vector<std::size_t> degrees;

  /// Throws InvalidArgument for an empty shape or a degree below 2.
  explicit WreathShape(std::vector<std::size_t> degrees);

  std::size_t levels() const noexcept { return degrees.size(); }
  /// n1 * ... * n_level (1 for level 0).
  std::size_t block_size(std::size_t level) const;
  std::size_t length() const { return block_size(levels()); }
  /// True when some degree is even or below 3: the wreath-product theorem does not cover it.
  bool beyond_theorem() const;
  std::string to_string() const;  // "3,3,3"
};

enum class ElementaryKind { Zero = 0, Repetition = 1, EvenWeight = 2, Full = 3 };

/// E0 = {0}, E1 = span(all-ones), E2 = even-weight code, E3 = whole space.
LinearCode elementary(ElementaryKind kind, std::size_t n);

BitVector row_matrix(const GridIndex& g, std::size_t i);
BitVector column_matrix(const GridIndex& g, std::size_t j);

/// span of all row and column matrices of the (normalized) a x b grid.
LinearCode c0(std::size_t a, std::size_t b);
/// span of r_i + c_j over the (normalized) a x b grid.
LinearCode c1(std::size_t a, std::size_t b);

/// a_i^(k,l): the all-ones pattern on blocks k and l of level i, as a vector
/// of length n1*...*n_i. k and l are 0-indexed and distinct.
BitVector a_generator(const WreathShape& shape, std::size_t level, std::size_t k, std::size_t l);

/// K(n1,...,nr): odd levels adjoin the a-generators to n_i shifted copies of
/// the previous code, even levels take the copies alone.
LinearCode k_code(const WreathShape& shape);

/// Expected dimension of K(n1,...,ni) from the alternating-sum formula.
std::size_t k_code_dimension_formula(const WreathShape& shape);
/// Expected minimum co-distance: product of the even-level degrees.
std::size_t k_code_codistance_formula(const WreathShape& shape);

/// Hamming code of length 2^r - 1 generated by a primitive factor of X^N - 1
/// (the least factor, in Poly2 order, whose roots are primitive N-th roots).
LinearCode hamming(unsigned r);
/// Binary Golay code of length 23 from the least degree-11 factor of X^23 - 1.
LinearCode golay23();

/// Generator polynomial selected by hamming(r) / golay23().
Poly2 hamming_generator(unsigned r);
Poly2 golay_generator();

// --- descriptors -------------------------------------------------------------

struct C0Family { std::size_t a, b; };
struct C1Family { std::size_t a, b; };
struct KFamily { WreathShape shape; };
struct ElementaryFamily { ElementaryKind kind; std::size_t n; };
struct HammingFamily { unsigned r; };
struct GolayFamily {};
struct CyclicFromGenerator { std::size_t n; Poly2 generator; };
struct ExplicitCode { std::string label; LinearCode code; };

/// Where a code came from; drives witnesses, expected groups and records.
using CodeSource = std::variant<C0Family, C1Family, KFamily, ElementaryFamily, HammingFamily,
                                GolayFamily, CyclicFromGenerator, ExplicitCode>;

/// Parses CLI tokens: "c0 a b", "c1 a b", "k n1,n2,...", "elementary {0..3} n",
/// "hamming r", "golay", "cyclic N poly". Throws InvalidArgument.
CodeSource parse_code_source(const std::vector<std::string>& tokens);

LinearCode build_code(const CodeSource& source);
std::string describe(const CodeSource& source);  // "c0 3 4", "k 3,3", ...

}  // namespace codeaut
