#pragma once

// Reducibility of k-partitions of finite spaces by monotone (continuous)
// maps, and the resulting degree structure.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "hier/space.hpp"

namespace hier {

using PointMap = std::vector<std::size_t>;

inline bool is_monotone_map(const FiniteSpace& x, const FiniteSpace& y, const PointMap& f) {
  for (std::size_t a = 0; a < x.n; ++a)
    for (std::size_t b = 0; b < x.n; ++b)
      if (x.leq(a, b) && !y.leq(f[a], f[b])) return false;
  return true;
}

// Every order-preserving map X -> Y.
inline std::vector<PointMap> monotone_maps(const FiniteSpace& x, const FiniteSpace& y, bool allow_large = false) {
  if (!allow_large && std::pow(double(y.n), double(x.n)) > 1e6)
    throw SizeGuardError("too many maps: " + std::to_string(y.n) + "^" + std::to_string(x.n));
  std::vector<PointMap> out;
  PointMap f(x.n, 0);
  std::function<void(std::size_t)> go = [&](std::size_t a) {
    if (a == x.n) {
      out.push_back(f);
      return;
    }
    for (std::size_t v = 0; v < y.n; ++v) {
      bool ok = true;
      for (std::size_t b = 0; ok && b < a; ++b) {
        if (x.leq(a, b) && !y.leq(v, f[b])) ok = false;
        if (x.leq(b, a) && !y.leq(f[b], v)) ok = false;
      }
      if (!ok) continue;
      f[a] = v;
      go(a + 1);
    }
  };
  go(0);
  return out;
}

// A = B o f for a monotone f : X -> Y.
inline bool wadge_leq(const KPartition& a, const FiniteSpace& x, const KPartition& b, const FiniteSpace& y) {
  if (a.points() != x.n || b.points() != y.n) throw std::invalid_argument("partition does not match its space");
  PointMap f(x.n, 0);
  std::function<bool(std::size_t)> go = [&](std::size_t p) {
    if (p == x.n) return true;
    for (std::size_t v = 0; v < y.n; ++v) {
      if (b.labels[v] != a.labels[p]) continue;
      bool ok = true;
      for (std::size_t q = 0; ok && q < p; ++q) {
        if (x.leq(p, q) && !y.leq(v, f[q])) ok = false;
        if (x.leq(q, p) && !y.leq(f[q], v)) ok = false;
      }
      if (!ok) continue;
      f[p] = v;
      if (go(p + 1)) return true;
    }
    return false;
  };
  return go(0);
}

inline bool wadge_leq(const KPartition& a, const KPartition& b, const FiniteSpace& x) { return wadge_leq(a, x, b, x); }

// ---------------------------------------------------------------------------
// Degrees

struct DegreePoset {
  std::vector<KPartition> partitions;         // all of k^X
  std::vector<std::size_t> degree_of;         // partition -> degree
  std::vector<std::vector<std::size_t>> members;  // degree -> partitions, ascending
  std::vector<std::vector<bool>> below;       // below[d][e]: d <= e
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // covering pairs (lower, upper)

  std::size_t size() const { return members.size(); }
  std::vector<std::size_t> minimal() const {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < size(); ++d) {
      bool min = true;
      for (std::size_t e = 0; e < size(); ++e)
        if (e != d && below[e][d]) min = false;
      if (min) out.push_back(d);
    }
    return out;
  }
  std::vector<std::size_t> maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < size(); ++d) {
      bool max = true;
      for (std::size_t e = 0; e < size(); ++e)
        if (e != d && below[d][e]) max = false;
      if (max) out.push_back(d);
    }
    return out;
  }
};

inline DegreePoset degree_poset(const FiniteSpace& x, int k, bool allow_large = false) {
  check_size(x.n, k, allow_large);
  DegreePoset dp;
  dp.partitions = all_partitions(x.n, k);
  std::size_t m = dp.partitions.size();
  std::vector<std::vector<bool>> red(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) red[i][j] = wadge_leq(dp.partitions[i], dp.partitions[j], x);
  std::vector<std::size_t> root(m);
  std::iota(root.begin(), root.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) { return root[i] == i ? i : root[i] = find(root[i]); };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (red[i][j] && red[j][i]) root[find(j)] = find(i);
  std::vector<std::size_t> id(m, m);
  dp.degree_of.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t r = find(i);
    if (id[r] == m) {
      id[r] = dp.members.size();
      dp.members.emplace_back();
    }
    dp.degree_of[i] = id[r];
    dp.members[id[r]].push_back(i);
  }
  std::size_t d = dp.members.size();
  dp.below.assign(d, std::vector<bool>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) dp.below[a][b] = red[dp.members[a][0]][dp.members[b][0]];
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (a == b || !dp.below[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; cover && c < d; ++c)
        if (c != a && c != b && dp.below[a][c] && dp.below[c][b]) cover = false;
      if (cover) dp.hasse.emplace_back(a, b);
    }
  return dp;
}

inline std::string degrees_to_dot(const DegreePoset& dp) {
  std::string out = "digraph degrees {\n  rankdir=BT;\n";
  for (std::size_t d = 0; d < dp.size(); ++d) {
    std::string label;
    for (std::size_t i : dp.members[d]) label += (label.empty() ? "" : " ") + partition_to_string(dp.partitions[i]);
    out += "  d" + std::to_string(d) + " [label=\"" + label + "\"];\n";
  }
  for (auto [a, b] : dp.hasse) out += "  d" + std::to_string(a) + " -> d" + std::to_string(b) + ";\n";
  return out + "}\n";
}

}  // namespace hier
