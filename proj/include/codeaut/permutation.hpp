#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace codeaut {

/// A permutation of {0, ..., N-1}; images()[x] is the image of x.
///
/// Permutations act on the right: (p * q) applies p first, then q.
class Permutation {
 public:
  using Point = std::uint32_t;

  Permutation() = default;
  /// Validates that `images` is a bijection of {0, ..., N-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);
  /// The standard shift i -> i+1 mod N.
  static Permutation shift(std::size_t degree);
  /// Parses the one-line form "p(0) p(1) ... p(N-1)".
  static Permutation parse(std::string_view one_line);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  Permutation inverse() const;
  friend Permutation operator*(const Permutation& first, const Permutation& then);
  Permutation pow(std::uint64_t exponent) const;

  bool is_identity() const noexcept;
  std::vector<std::vector<Point>> cycles() const;
  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;
  /// True iff the permutation is a single cycle through all N points.
  bool is_regular_cycle() const;
  /// Least point moved, or degree() for the identity.
  std::size_t least_moved_point() const noexcept;

  std::string to_string() const;        // one-line image list
  std::string to_cycle_string() const;  // "(0 1 2)(3 4)", "()" for the identity

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

}  // namespace codeaut
