// Automorphism groups of binary codes by partition-refinement backtracking
// on an invariant incidence structure (points = coordinates, blocks = the
// codewords of the chosen weight classes).

#include <algorithm>
#include <map>
#include <numeric>

#include "codeaut/error.hpp"
#include "codeaut/perm.hpp"

namespace codeaut {

namespace {

using Clock = std::chrono::steady_clock;
using Point = Permutation::Point;
using Colors = std::vector<std::uint32_t>;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Incidence {
  std::size_t points = 0;
  std::vector<std::vector<Point>> blocks;
  std::vector<std::uint32_t> block_class;
  std::vector<std::vector<std::uint32_t>> point_blocks;
  std::size_t classes = 0;
};

struct Partition {
  Colors color;
  std::uint32_t cells = 0;

  bool discrete() const { return cells == color.size(); }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

class Search {
 public:
  Search(const LinearCode& code, const Incidence& incidence, std::optional<Clock::time_point> deadline)
      : code_(code), inc_(incidence), deadline_(deadline), block_hash_(incidence.blocks.size()),
        signature_(incidence.points) {}

  std::uint64_t nodes() const { return nodes_; }

  // Refines p to a stable partition in an equivariant way and returns a trace
  // of the splits, equal for partitions related by an automorphism.
  std::uint64_t refine(Partition& p) {
    ++nodes_;
    check_deadline();
    const std::size_t n = inc_.points;
    std::uint64_t trace = mix(p.cells);
    std::vector<std::uint32_t> order(n);
    while (true) {
      for (std::size_t b = 0; b < inc_.blocks.size(); ++b) {
        std::uint64_t h = mix(0x51ed270bULL + inc_.block_class[b]);
        for (Point x : inc_.blocks[b]) h += mix(p.color[x]);
        block_hash_[b] = mix(h);
      }
      for (std::size_t x = 0; x < n; ++x) {
        std::uint64_t s = 0;
        for (std::uint32_t b : inc_.point_blocks[x]) s += block_hash_[b];
        signature_[x] = mix(s);
      }
      std::iota(order.begin(), order.end(), 0U);
      std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        if (p.color[x] != p.color[y]) return p.color[x] < p.color[y];
        return signature_[x] < signature_[y];
      });
      Colors next(n);
      std::uint32_t rank = 0;
      std::uint32_t run = 0;
      for (std::size_t t = 0; t < n; ++t) {
        const std::uint32_t x = order[t];
        if (t > 0) {
          const std::uint32_t y = order[t - 1];
          if (p.color[x] != p.color[y] || signature_[x] != signature_[y]) {
            trace = mix(trace ^ mix(p.color[y] * 0x100000001ULL + run) ^ signature_[y]);
            ++rank;
            run = 0;
          }
        }
        next[x] = rank;
        ++run;
      }
      if (n > 0) trace = mix(trace ^ mix(p.color[order[n - 1]] * 0x100000001ULL + run) ^ signature_[order[n - 1]]);
      const std::uint32_t cells = n == 0 ? 0 : rank + 1;
      const bool stable = cells == p.cells;
      p.color = std::move(next);
      p.cells = cells;
      if (stable) break;
    }
    return trace;
  }

  static Partition individualize(const Partition& p, Point x) {
    Partition q = p;
    const std::uint32_t c = p.color[x];
    for (std::size_t y = 0; y < q.color.size(); ++y) {
      if (q.color[y] > c || (q.color[y] == c && y != x)) ++q.color[y];
    }
    ++q.cells;
    return q;
  }

  // Points of the first non-singleton cell, ascending.
  static std::vector<Point> target_cell(const Partition& p) {
    std::vector<std::uint32_t> sizes(p.cells, 0);
    for (auto c : p.color) ++sizes[c];
    std::uint32_t target = 0;
    while (sizes[target] == 1) ++target;
    std::vector<Point> cell;
    for (std::size_t x = 0; x < p.color.size(); ++x) {
      if (p.color[x] == target) cell.push_back(static_cast<Point>(x));
    }
    return cell;
  }

  AutReport run(Partition root) {
    const std::size_t n = inc_.points;
    traces_.push_back(refine(root));
    Partition node = std::move(root);
    while (!node.discrete()) {
      path_.push_back(node);
      cells_.push_back(target_cell(node));
      base_.push_back(cells_.back().front());
      node = individualize(node, base_.back());
      traces_.push_back(refine(node));
    }
    leaf0_ = node.color;

    UnionFind orbits(n);
    std::vector<Permutation> generators;
    std::vector<std::size_t> orbit_sizes(base_.size());
    for (std::size_t level = base_.size(); level-- > 0;) {
      const Point b = base_[level];
      std::vector<Point> failed;
      for (Point x : cells_[level]) {
        if (x == b || orbits.find(x) == orbits.find(b)) continue;
        const bool known_failure = std::any_of(failed.begin(), failed.end(), [&](Point f) {
          return orbits.find(f) == orbits.find(x);
        });
        if (known_failure) continue;
        auto g = search_child(level, x);
        if (!g) {
          failed.push_back(x);
          continue;
        }
        for (std::size_t y = 0; y < n; ++y) orbits.unite(y, (*g)(static_cast<Point>(y)));
        generators.push_back(std::move(*g));
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (orbits.find(y) == orbits.find(b)) ++orbit_sizes[level];
      }
    }

    AutReport report;
    report.group = PermGroup(n, std::move(generators));
    BigInt order = 1;
    for (std::size_t s : orbit_sizes) order *= s;
    if (order != report.group.order()) {
      throw Error(ErrorKind::Internal, "search orbit product " + to_decimal(order) +
                                           " disagrees with Schreier-Sims order " +
                                           to_decimal(report.group.order()));
    }
    report.nodes = nodes_;
    return report;
  }

 private:
  void check_deadline() const {
    if (deadline_ && Clock::now() > *deadline_) {
      throw Error(ErrorKind::BudgetExceeded, "automorphism search exceeded its time budget");
    }
  }

  std::optional<Permutation> search_child(std::size_t level, Point x) {
    Partition child = individualize(path_[level], x);
    if (refine(child) != traces_[level + 1]) return std::nullopt;
    return descend(child, level + 1);
  }

  std::optional<Permutation> descend(const Partition& node, std::size_t depth) {
    if (node.discrete()) return leaf_automorphism(node, depth);
    if (depth >= path_.size()) return std::nullopt;
    for (Point y : target_cell(node)) {
      Partition child = individualize(node, y);
      if (refine(child) != traces_[depth + 1]) continue;
      if (auto g = descend(child, depth + 1)) return g;
    }
    return std::nullopt;
  }

  std::optional<Permutation> leaf_automorphism(const Partition& leaf, std::size_t depth) {
    if (depth != path_.size()) return std::nullopt;
    const std::size_t n = inc_.points;
    std::vector<Point> by_color(n);
    for (std::size_t y = 0; y < n; ++y) by_color[leaf.color[y]] = static_cast<Point>(y);
    std::vector<Point> images(n);
    for (std::size_t y = 0; y < n; ++y) images[y] = by_color[leaf0_[y]];
    Permutation g(std::move(images));
    if (!is_invariant(code_, g)) return std::nullopt;
    return g;
  }

  const LinearCode& code_;
  const Incidence& inc_;
  std::optional<Clock::time_point> deadline_;
  std::vector<std::uint64_t> block_hash_;
  std::vector<std::uint64_t> signature_;
  std::uint64_t nodes_ = 0;

  std::vector<Partition> path_;
  std::vector<std::vector<Point>> cells_;
  std::vector<Point> base_;
  std::vector<std::uint64_t> traces_;  // traces_[d]: trace of the first-path node at depth d
  Colors leaf0_;
};

// Initial colors: per class, how many blocks contain the point, then the
// sorted multiset of joint counts with every other point.
Partition fingerprint_partition(const Incidence& inc) {
  const std::size_t n = inc.points;
  std::vector<std::vector<std::uint64_t>> fingerprint(n);
  std::vector<std::uint32_t> joint(n * n);
  for (std::size_t cls = 0; cls < inc.classes; ++cls) {
    std::fill(joint.begin(), joint.end(), 0);
    std::vector<std::uint64_t> containment(n, 0);
    for (std::size_t b = 0; b < inc.blocks.size(); ++b) {
      if (inc.block_class[b] != cls) continue;
      const auto& block = inc.blocks[b];
      for (Point x : block) {
        ++containment[x];
        for (Point y : block) {
          if (x != y) ++joint[x * n + y];
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      fingerprint[x].push_back(containment[x]);
      std::vector<std::uint32_t> row(joint.begin() + static_cast<std::ptrdiff_t>(x * n),
                                     joint.begin() + static_cast<std::ptrdiff_t>((x + 1) * n));
      row.erase(row.begin() + static_cast<std::ptrdiff_t>(x));
      std::sort(row.begin(), row.end());
      fingerprint[x].insert(fingerprint[x].end(), row.begin(), row.end());
    }
  }
  std::map<std::vector<std::uint64_t>, std::uint32_t> ranks;
  for (const auto& f : fingerprint) ranks.emplace(f, 0);
  std::uint32_t next = 0;
  for (auto& [key, rank] : ranks) rank = next++;
  Partition p;
  p.color.resize(n);
  for (std::size_t x = 0; x < n; ++x) p.color[x] = ranks.at(fingerprint[x]);
  p.cells = next;
  return p;
}

}  // namespace

AutReport automorphism_group(const LinearCode& code, const AutOptions& options) {
  const auto start = Clock::now();
  // Aut(C) = Aut(dual C); work with whichever has fewer codewords.
  const bool via_dual = code.dimension() > code.length() - code.dimension();
  const LinearCode c = via_dual ? dual(code) : code;
  std::optional<Clock::time_point> deadline;
  if (options.time_budget) deadline = start + *options.time_budget;

  const std::size_t n = c.length();
  Incidence inc;
  inc.points = n;
  inc.point_blocks.resize(n);
  std::vector<std::size_t> weights_used, class_sizes;

  if (c.dimension() > 0) {
    const auto distribution = weight_distribution(c, options.limits);
    std::vector<std::pair<BigInt, std::size_t>> classes;
    for (std::size_t w = 1; w <= n; ++w) {
      if (distribution[w] != 0) classes.emplace_back(distribution[w], w);
    }
    std::sort(classes.begin(), classes.end());

    Rref spanned{BitMatrix(n), {}};
    for (const auto& [size, w] : classes) {
      if (size > options.limits.codeword_cap) {
        throw Error(ErrorKind::EnumerationInfeasible, "weight class " + std::to_string(w) + " has " +
                                                          to_decimal(size) + " codewords, above the cap");
      }
      const auto cls = static_cast<std::uint32_t>(weights_used.size());
      for_each_codeword(
          c,
          [&](const BitVector& v) {
            if (v.weight() != w) return;
            inc.block_class.push_back(cls);
            std::vector<Point> block;
            for (std::size_t x : v.support()) {
              block.push_back(static_cast<Point>(x));
              inc.point_blocks[x].push_back(static_cast<std::uint32_t>(inc.blocks.size()));
            }
            inc.blocks.push_back(std::move(block));
            if (spanned.basis.nrows() < c.dimension() && reduce(spanned.basis, spanned.pivots, v).any()) {
              BitMatrix grown = spanned.basis;
              grown.push_back(v);
              spanned = rref(grown);
            }
          },
          options.limits);
      weights_used.push_back(w);
      class_sizes.push_back(static_cast<std::size_t>(size));
      if (spanned.basis.nrows() == c.dimension()) break;
      if (deadline && Clock::now() > *deadline) {
        throw Error(ErrorKind::BudgetExceeded, "automorphism search exceeded its time budget");
      }
    }
    inc.classes = weights_used.size();
  }

  Search search(c, inc, deadline);
  AutReport report = search.run(fingerprint_partition(inc));
  for (const auto& g : report.group.generators()) {
    if (!is_invariant(code, g)) throw Error(ErrorKind::Internal, "search returned a non-automorphism");
  }
  report.via_dual = via_dual;
  report.weights_used = std::move(weights_used);
  report.class_sizes = std::move(class_sizes);
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace codeaut
