#pragma once

// Finite T0 spaces as posets with the Alexandrov topology (opens are
// up-sets), bases of subsets, omega-bases and k-partitions.  Subsets are
// bitmasks over at most 32 points.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hier/nested.hpp"

namespace hier {

using PointSet = std::uint32_t;

inline constexpr std::size_t max_points = 32;

inline PointSet full_set(std::size_t n) { return n >= 32 ? ~PointSet{0} : (PointSet{1} << n) - 1; }

inline bool contains(PointSet s, std::size_t x) { return (s >> x) & 1u; }

inline bool subset_of(PointSet a, PointSet b) { return (a & ~b) == 0; }

inline std::vector<std::size_t> members(PointSet s) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < max_points; ++x)
    if (contains(s, x)) out.push_back(x);
  return out;
}

inline std::string set_to_string(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (auto x : members(s)) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

// Soft limits on enumeration sizes; lifted with allow_large.
class SizeGuardError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline void check_size(std::size_t points, int k, bool allow_large = false) {
  if (points > max_points) throw std::invalid_argument("at most 32 points are supported");
  if (allow_large) return;
  if (points > 5) throw SizeGuardError("space has " + std::to_string(points) + " points, limit is 5");
  if (k > 4) throw SizeGuardError("k = " + std::to_string(k) + ", limit is 4");
}

// ---------------------------------------------------------------------------
// Spaces

struct FiniteSpace {
  std::size_t n = 0;
  Relation le;  // le[x][y]: x <= y

  bool leq(std::size_t x, std::size_t y) const { return le[x][y]; }
};

// Reflexive-transitive closure of the given pairs; rejects cycles.
inline FiniteSpace space_from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  if (n > max_points) throw std::invalid_argument("at most 32 points are supported");
  FiniteSpace s{n, Relation(n, std::vector<bool>(n, false))};
  for (std::size_t i = 0; i < n; ++i) s.le[i][i] = true;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw std::invalid_argument("point index out of range");
    s.le[a][b] = true;
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (s.le[a][m] && s.le[m][b]) s.le[a][b] = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && s.le[a][b] && s.le[b][a])
        throw std::invalid_argument("order has a cycle through points " + std::to_string(a) + " and " + std::to_string(b));
  return s;
}

inline FiniteSpace chain_space(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return space_from_pairs(n, pairs);
}

inline FiniteSpace antichain_space(std::size_t n) { return space_from_pairs(n, {}); }

// Throws unless le is a partial order on n points.
inline void validate(const FiniteSpace& s) {
  if (s.n > max_points) throw std::invalid_argument("at most 32 points are supported");
  if (s.le.size() != s.n) throw std::invalid_argument("order matrix has the wrong size");
  for (const auto& row : s.le)
    if (row.size() != s.n) throw std::invalid_argument("order matrix has the wrong size");
  for (std::size_t a = 0; a < s.n; ++a) {
    if (!s.le[a][a]) throw std::invalid_argument("order is not reflexive");
    for (std::size_t b = 0; b < s.n; ++b) {
      if (a != b && s.le[a][b] && s.le[b][a]) throw std::invalid_argument("order is not antisymmetric");
      for (std::size_t c = 0; c < s.n; ++c)
        if (s.le[a][b] && s.le[b][c] && !s.le[a][c]) throw std::invalid_argument("order is not transitive");
    }
  }
}

inline PointSet up_closure(const FiniteSpace& s, PointSet a) {
  PointSet out = a;
  for (auto x : members(a))
    for (std::size_t y = 0; y < s.n; ++y)
      if (s.leq(x, y)) out |= PointSet{1} << y;
  return out;
}

inline bool is_up_set(const FiniteSpace& s, PointSet a) { return up_closure(s, a) == a; }

// ---------------------------------------------------------------------------
// Bases

// A family of subsets of 0..points-1 closed under binary union and
// intersection and containing the empty set; sets sorted ascending.
struct Base {
  std::size_t points = 0;
  std::vector<PointSet> sets;

  bool contains(PointSet s) const { return std::binary_search(sets.begin(), sets.end(), s); }
};

inline Base close_base(std::size_t points, const std::vector<PointSet>& seed) {
  PointSet universe = full_set(points);
  std::set<PointSet> fam{0};
  for (PointSet s : seed) {
    if (!subset_of(s, universe)) throw std::invalid_argument("set " + set_to_string(s) + " leaves the space");
    fam.insert(s);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PointSet> cur(fam.begin(), fam.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        grew |= fam.insert(cur[i] | cur[j]).second;
        grew |= fam.insert(cur[i] & cur[j]).second;
      }
  }
  return Base{points, {fam.begin(), fam.end()}};
}

inline void validate(const Base& b) {
  if (b.points > max_points) throw std::invalid_argument("at most 32 points are supported");
  if (!std::is_sorted(b.sets.begin(), b.sets.end()) ||
      std::adjacent_find(b.sets.begin(), b.sets.end()) != b.sets.end())
    throw std::invalid_argument("base sets must be sorted and distinct");
  if (!b.contains(0)) throw std::invalid_argument("base lacks the empty set");
  for (PointSet s : b.sets) {
    if (!subset_of(s, full_set(b.points))) throw std::invalid_argument("set " + set_to_string(s) + " leaves the space");
    for (PointSet t : b.sets)
      if (!b.contains(s | t) || !b.contains(s & t))
        throw std::invalid_argument("base is not closed under union and intersection: " + set_to_string(s) + ", " +
                                    set_to_string(t));
  }
}

inline Base up_sets(const FiniteSpace& s) {
  Base b{s.n, {}};
  for (PointSet a = 0; a <= full_set(s.n); ++a) {
    if (is_up_set(s, a)) b.sets.push_back(a);
    if (a == full_set(s.n)) break;
  }
  return b;
}

inline Base powerset(std::size_t n) {
  Base b{n, {}};
  for (PointSet a = 0;; ++a) {
    b.sets.push_back(a);
    if (a == full_set(n)) break;
  }
  return b;
}

// Every pair A, B of the base splits into disjoint A' <= A, B' <= B from
// the base with the same union.
inline std::optional<std::pair<PointSet, PointSet>> reduce_pair(const Base& l, PointSet a, PointSet b) {
  for (PointSet a2 : l.sets) {
    if (!subset_of(a2, a)) continue;
    for (PointSet b2 : l.sets)
      if (subset_of(b2, b) && (a2 & b2) == 0 && (a2 | b2) == (a | b)) return std::pair{a2, b2};
  }
  return std::nullopt;
}

inline bool has_reduction_property(const Base& l) {
  for (PointSet a : l.sets)
    for (PointSet b : l.sets)
      if (!reduce_pair(l, a, b)) return false;
  return true;
}

// Disjoint S'_i <= S_i from the base with the same union, by iterated
// pairwise reduction; none when some step has no reduction.
inline std::optional<std::vector<PointSet>> reduce_sequence(const Base& l, std::vector<PointSet> sets) {
  std::vector<PointSet> out(sets.size(), 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    PointSet rest = 0;
    for (std::size_t j = i + 1; j < sets.size(); ++j) rest |= sets[j];
    auto r = reduce_pair(l, sets[i], rest);
    if (!r) return std::nullopt;
    out[i] = r->first;
    for (std::size_t j = i + 1; j < sets.size(); ++j) sets[j] &= r->second;
  }
  return out;
}

// L_0, L_1, ... with L_j and the complements of its sets inside L_{j+1}.
struct OmegaBase {
  std::vector<Base> levels;

  std::size_t points() const { return levels.empty() ? 0 : levels[0].points; }
};

inline void validate(const OmegaBase& ob) {
  if (ob.levels.empty()) throw std::invalid_argument("omega-base has no levels");
  for (const auto& l : ob.levels) {
    validate(l);
    if (l.points != ob.points()) throw std::invalid_argument("omega-base levels live on different spaces");
  }
  PointSet all = full_set(ob.points());
  for (std::size_t j = 0; j + 1 < ob.levels.size(); ++j)
    for (PointSet s : ob.levels[j].sets)
      if (!ob.levels[j + 1].contains(s) || !ob.levels[j + 1].contains(all & ~s))
        throw std::invalid_argument("level " + std::to_string(j + 1) + " misses " + set_to_string(s) +
                                    " or its complement from level " + std::to_string(j));
}

// L_0 followed by levels that each add the complements of the previous one.
inline OmegaBase omega_base_over(const Base& first, std::size_t levels) {
  OmegaBase ob{{first}};
  PointSet all = full_set(first.points);
  while (ob.levels.size() < levels) {
    std::vector<PointSet> seed = ob.levels.back().sets;
    for (PointSet s : ob.levels.back().sets) seed.push_back(all & ~s);
    ob.levels.push_back(close_base(first.points, seed));
  }
  return ob;
}

// ---------------------------------------------------------------------------
// k-partitions

struct KPartition {
  std::vector<int> labels;

  std::size_t points() const { return labels.size(); }
  PointSet part(int i) const {
    PointSet s = 0;
    for (std::size_t x = 0; x < labels.size(); ++x)
      if (labels[x] == i) s |= PointSet{1} << x;
    return s;
  }
};

inline bool operator==(const KPartition& a, const KPartition& b) { return a.labels == b.labels; }

inline void check_partition(const KPartition& a, std::size_t points, int k) {
  if (a.points() != points)
    throw std::invalid_argument("partition has " + std::to_string(a.points()) + " labels for " +
                                std::to_string(points) + " points");
  for (int c : a.labels)
    if (c < 0 || c >= k) throw std::invalid_argument("partition label " + std::to_string(c) + " out of range");
}

// All k^n partitions, the label of point 0 varying fastest.
inline std::vector<KPartition> all_partitions(std::size_t n, int k) {
  std::vector<KPartition> out;
  std::vector<int> cur(n, 0);
  while (true) {
    out.push_back(KPartition{cur});
    std::size_t pos = 0;
    while (pos < n && ++cur[pos] == k) cur[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

inline std::string partition_to_string(const KPartition& a) {
  std::string out;
  for (int c : a.labels) out += std::to_string(c);
  return out;
}

// ---------------------------------------------------------------------------
// Difference operation on a finite sequence A_0..A_{a-1}: the points first
// entering at a position of parity opposite to a.
inline PointSet difference_kernel(const std::vector<PointSet>& seq) {
  PointSet seen = 0, out = 0;
  std::size_t alpha = seq.size();
  for (std::size_t b = 0; b < alpha; ++b) {
    if (b % 2 != alpha % 2) out |= seq[b] & ~seen;
    seen |= seq[b];
  }
  return out;
}

}  // namespace hier
