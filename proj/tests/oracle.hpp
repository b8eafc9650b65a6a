#pragma once

// Independent brute-force reference computations for the tests. Nothing here
// calls the library's linear algebra beyond BitVector storage.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "codeaut/gf2.hpp"

namespace oracle {

using codeaut::BitVector;

inline std::vector<BitVector> all_vectors(std::size_t n) {
  std::vector<BitVector> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if ((bits >> i) & 1U) v.set(i);
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline std::vector<BitVector> random_vectors(std::mt19937_64& rng, std::size_t n, std::size_t count) {
  std::vector<BitVector> out;
  for (std::size_t c = 0; c < count; ++c) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() & 1U) v.set(i);
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// Every sum of a subset of the generators.
inline std::set<BitVector> span_of(const std::vector<BitVector>& gens, std::size_t n) {
  std::set<BitVector> span{BitVector(n)};
  for (const auto& g : gens) {
    std::vector<BitVector> added;
    for (const auto& v : span) added.push_back(v ^ g);
    span.insert(added.begin(), added.end());
  }
  return span;
}

inline std::map<std::size_t, std::uint64_t> weight_histogram(const std::set<BitVector>& words) {
  std::map<std::size_t, std::uint64_t> h;
  for (const auto& v : words) ++h[v.weight()];
  return h;
}

inline BitVector permuted(const BitVector& v, const std::vector<std::uint32_t>& images) {
  BitVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.test(i)) out.set(images[i]);
  }
  return out;
}

/// |Aut| of the span by testing every permutation against the full codeword set.
inline std::uint64_t automorphism_count(const std::set<BitVector>& words, std::size_t n) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0U);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& v : words) {
      if (!words.count(permuted(v, images))) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(images.begin(), images.end()));
  return count;
}

/// Closure of the generators under composition (images[x] convention), as image lists.
inline std::set<std::vector<std::uint32_t>> group_closure(const std::vector<std::vector<std::uint32_t>>& gens,
                                                          std::size_t n) {
  std::vector<std::uint32_t> id(n);
  std::iota(id.begin(), id.end(), 0U);
  std::set<std::vector<std::uint32_t>> seen{id};
  std::vector<std::vector<std::uint32_t>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        std::vector<std::uint32_t> q(n);
        for (std::size_t x = 0; x < n; ++x) q[x] = g[p[x]];
        if (seen.insert(q).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// Carry-less product of bit-packed polynomials (bit i = coefficient of X^i).
inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  for (int i = 0; i < 64; ++i) {
    if ((b >> i) & 1U) r ^= a << i;
  }
  return r;
}

inline int degree_of(std::uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

inline std::uint64_t clmod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree_of(m);
  while (degree_of(a) >= dm) a ^= m << (degree_of(a) - dm);
  return a;
}

/// Irreducibility by trial division over every polynomial of degree 1..deg/2.
inline bool irreducible_by_trial(std::uint64_t p) {
  const int d = degree_of(p);
  if (d < 1) return false;
  for (std::uint64_t q = 2; degree_of(q) <= d / 2; ++q) {
    if (clmod(p, q) == 0) return false;
  }
  return true;
}

}  // namespace oracle
