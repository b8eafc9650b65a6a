#include "codeaut/permutation.hpp"

#include <numeric>
#include <sstream>

#include "codeaut/error.hpp"

namespace codeaut {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw Error(ErrorKind::InvalidArgument, "image list is not a permutation");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point from = cycle[i];
      if (from >= degree || used[from]) {
        throw Error(ErrorKind::InvalidArgument, "cycles are not disjoint or out of range");
      }
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::shift(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>((i + 1) % degree);
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view one_line) {
  std::istringstream in{std::string(one_line)};
  std::vector<Point> images;
  long long value = 0;
  while (in >> value) {
    if (value < 0) throw Error(ErrorKind::InvalidArgument, "negative point in permutation");
    images.push_back(static_cast<Point>(value));
  }
  if (!in.eof()) throw Error(ErrorKind::InvalidArgument, "malformed permutation text");
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv.images_[images_[x]] = static_cast<Point>(x);
  return inv;
}

Permutation operator*(const Permutation& first, const Permutation& then) {
  if (first.degree() != then.degree()) {
    throw Error(ErrorKind::LengthMismatch, "composing permutations of different degree");
  }
  Permutation result;
  result.images_.resize(first.degree());
  for (std::size_t x = 0; x < first.degree(); ++x) result.images_[x] = then.images_[first.images_[x]];
  return result;
}

Permutation Permutation::pow(std::uint64_t exponent) const {
  Permutation result = identity(degree());
  Permutation base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    base = base * base;
    exponent >>= 1U;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::vector<std::vector<Permutation::Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

bool Permutation::is_regular_cycle() const {
  if (images_.empty()) return false;
  std::size_t length = 0;
  Point x = 0;
  do {
    x = images_[x];
    ++length;
  } while (x != 0 && length <= images_.size());
  return length == images_.size();
}

std::size_t Permutation::least_moved_point() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return x;
  }
  return images_.size();
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (x != 0) s += ' ';
    s += std::to_string(images_[x]);
  }
  return s;
}

std::string Permutation::to_cycle_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i != 0) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

}  // namespace codeaut
