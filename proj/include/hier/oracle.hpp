#pragma once

// Brute-force reference procedures.  Nothing here calls the h-preorder,
// meet, or membership code it is used to check; everything is plain
// enumeration over small universes.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "forest.hpp"

namespace hier::oracle {

// ---------------------------------------------------------------------------
// Enumeration of forests

namespace detail {

// Order-insensitive key: children sorted recursively.
inline std::string canon_key(const Forest& f);

inline std::string canon_key(const Tree& t) {
  std::string s = t.label.is_color() ? std::to_string(t.label.color()) : "[" + canon_key(t.label.forest()) + "]";
  return s + "(" + canon_key(t.children) + ")";
}

inline std::string canon_key(const Forest& f) {
  std::vector<std::string> parts;
  for (const auto& t : f.trees) parts.push_back(canon_key(t));
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (const auto& p : parts) s += p + ",";
  return s;
}

// Multisets of trees drawn from `pool` (indices non-increasing) with the
// given total weight.
inline void multisets(const std::vector<Tree>& pool, const std::vector<std::size_t>& weight, std::size_t budget,
                      std::size_t max_index, Forest& cur, const std::function<void(const Forest&)>& emit) {
  if (budget == 0) {
    emit(cur);
    return;
  }
  for (std::size_t i = max_index; i-- > 0;) {
    if (weight[i] > budget) continue;
    cur.trees.push_back(pool[i]);
    multisets(pool, weight, budget - weight[i], i + 1, cur, emit);
    cur.trees.pop_back();
  }
}

}  // namespace detail

inline std::string canonical_key(const Forest& f) { return detail::canon_key(f); }

// All flat trees with exactly n nodes and colors < k, one per isomorphism type.
inline std::vector<std::vector<Tree>> flat_trees_by_size(std::size_t max_nodes, int k) {
  std::vector<std::vector<Tree>> by_size(max_nodes + 1);
  std::vector<Tree> pool;
  std::vector<std::size_t> weight;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    Forest cur;
    std::vector<Forest> kids;
    detail::multisets(pool, weight, n - 1, pool.size(), cur, [&](const Forest& f) { kids.push_back(f); });
    for (const auto& f : kids)
      for (int c = 0; c < k; ++c) by_size[n].push_back(Tree{Label::color(c), f});
    for (const auto& t : by_size[n]) {
      pool.push_back(t);
      weight.push_back(n);
    }
  }
  return by_size;
}

// All flat forests with 1..max_nodes nodes (plus the empty forest if asked).
inline std::vector<Forest> flat_forests(std::size_t max_nodes, int k, bool include_empty = false) {
  auto by_size = flat_trees_by_size(max_nodes, k);
  std::vector<Tree> pool;
  std::vector<std::size_t> weight;
  for (std::size_t n = 1; n <= max_nodes; ++n)
    for (const auto& t : by_size[n]) {
      pool.push_back(t);
      weight.push_back(n);
    }
  std::vector<Forest> out;
  if (include_empty) out.push_back(Forest{});
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    Forest cur;
    detail::multisets(pool, weight, n, pool.size(), cur, [&](const Forest& f) { out.push_back(f); });
  }
  return out;
}

// Forests of nesting level <= max_level whose total node count (all levels)
// is at most max_total.  Nested labels are nonempty and never a bare color.
inline std::vector<Forest> nested_forests(std::size_t max_total, int k, int max_level) {
  // labels_by_size[s]: labels whose nested forest has total size s (s = 0: colors)
  std::vector<std::vector<Label>> labels_by_size(max_total + 1);
  for (int c = 0; c < k; ++c) labels_by_size[0].push_back(Label::color(c));
  for (int level = 1; level <= max_level; ++level) {
    // trees of this level, by total size
    std::vector<Tree> pool;
    std::vector<std::size_t> weight;
    std::vector<Forest> forests;
    for (std::size_t n = 1; n <= max_total; ++n) {
      std::vector<Tree> fresh;
      for (std::size_t ls = 0; ls + 1 <= n; ++ls) {
        Forest cur;
        std::vector<Forest> kids;
        detail::multisets(pool, weight, n - 1 - ls, pool.size(), cur, [&](const Forest& f) { kids.push_back(f); });
        for (const auto& l : labels_by_size[ls])
          for (const auto& f : kids) fresh.push_back(Tree{l, f});
      }
      for (auto& t : fresh) {
        pool.push_back(std::move(t));
        weight.push_back(n);
      }
    }
    for (std::size_t n = 1; n <= max_total; ++n) {
      Forest cur;
      detail::multisets(pool, weight, n, pool.size(), cur, [&](const Forest& f) { forests.push_back(f); });
    }
    if (level == max_level) {
      std::set<std::string> seen;
      std::vector<Forest> out;
      for (auto& f : forests)
        if (seen.insert(canonical_key(f)).second) out.push_back(std::move(f));
      return out;
    }
    // forests of this level become labels for the next
    for (auto& s : labels_by_size)
      if (&s != &labels_by_size[0]) s.clear();
    std::set<std::string> seen;
    for (const auto& f : forests) {
      Label l = Label::nested(f);
      if (l.is_color()) continue;
      std::size_t sz = total_size(f);
      if (sz < labels_by_size.size() && seen.insert(canonical_key(f)).second) labels_by_size[sz].push_back(l);
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Morphism search by exhaustive assignment

struct FlatNode {
  const Label* label;
  std::vector<std::size_t> above;  // indices of ancestors, self included
};

inline void flatten_nodes(const Forest& f, std::vector<std::size_t>& stack, std::vector<FlatNode>& out) {
  for (const auto& t : f.trees) {
    std::size_t id = out.size();
    stack.push_back(id);
    out.push_back(FlatNode{&t.label, stack});
    flatten_nodes(t.children, stack, out);
    stack.pop_back();
  }
}

inline std::vector<FlatNode> nodes_of(const Forest& f) {
  std::vector<FlatNode> out;
  std::vector<std::size_t> stack;
  flatten_nodes(f, stack, out);
  return out;
}

bool brute_h_leq(const Forest& f, const Forest& g);

inline bool brute_label_leq(const Label& a, const Label& b) {
  if (a.is_color() && b.is_color()) return a.color() == b.color();
  Forest fa = a.is_color() ? as_forest(leaf(a.color())) : a.forest();
  Forest fb = b.is_color() ? as_forest(leaf(b.color())) : b.forest();
  return brute_h_leq(fa, fb);
}

// Exists f: nodes(F) -> nodes(G), x <= y => f(x) <= f(y), label(x) <= label(f(x)).
// Every function is visited (in lexicographic order) unless one succeeds.
inline bool brute_h_leq(const Forest& f, const Forest& g) {
  auto src = nodes_of(f);
  auto dst = nodes_of(g);
  if (src.empty()) return true;
  if (dst.empty()) return false;
  auto is_leq = [](const std::vector<FlatNode>& ns, std::size_t x, std::size_t y) {
    const auto& a = ns[x].above;
    return std::find(a.begin(), a.end(), y) != a.end();
  };
  std::vector<std::vector<char>> label_ok(src.size(), std::vector<char>(dst.size()));
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < dst.size(); ++j) label_ok[i][j] = brute_label_leq(*src[i].label, *dst[j].label);
  std::vector<std::size_t> img(src.size(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < src.size(); ++i) ok = label_ok[i][img[i]];
    for (std::size_t x = 0; ok && x < src.size(); ++x)
      for (std::size_t y : src[x].above)
        if (!is_leq(dst, img[x], img[y])) {
          ok = false;
          break;
        }
    if (ok) return true;
    std::size_t pos = 0;
    while (pos < img.size() && ++img[pos] == dst.size()) img[pos++] = 0;
    if (pos == img.size()) return false;
  }
}

// Same relation, visiting the function space depth first: nodes are
// assigned parents-first and a partial assignment is abandoned as soon as
// a label or an ancestor constraint fails.  Used where the full product
// is too large to walk.
inline bool pruned_h_leq(const Forest& f, const Forest& g) {
  auto src = nodes_of(f);
  auto dst = nodes_of(g);
  if (src.empty()) return true;
  if (dst.empty()) return false;
  std::vector<std::vector<std::size_t>> cand(src.size());
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < dst.size(); ++j)
      if (brute_label_leq(*src[i].label, *dst[j].label)) cand[i].push_back(j);
  std::vector<std::size_t> img(src.size());
  // preorder numbering puts every ancestor before its descendants
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == src.size()) return true;
    for (std::size_t j : cand[i]) {
      bool ok = true;
      for (std::size_t a : src[i].above) {
        if (a == i) continue;
        const auto& up = dst[j].above;
        if (std::find(up.begin(), up.end(), img[a]) == up.end()) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      img[i] = j;
      if (go(i + 1)) return true;
    }
    return false;
  };
  return go(0);
}

// ---------------------------------------------------------------------------
// Random flat forests

inline Forest random_flat_forest(std::mt19937& rng, std::size_t max_nodes, int k) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_nodes);
  std::uniform_int_distribution<int> color(0, k - 1);
  std::size_t n = size_dist(rng);
  // parent[i] < i or none; built as a random recursive forest
  std::vector<int> parent(n, -1);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> p(-1, static_cast<int>(i) - 1);
    parent[i] = p(rng);
  }
  std::vector<Tree> nodes(n);
  for (auto& t : nodes) t.label = Label::color(color(rng));
  for (std::size_t i = n; i-- > 0;)
    if (parent[i] >= 0) nodes[static_cast<std::size_t>(parent[i])].children.trees.push_back(nodes[i]);
  Forest f;
  for (std::size_t i = 0; i < n; ++i)
    if (parent[i] < 0) f.trees.push_back(nodes[i]);
  return f;
}

// ---------------------------------------------------------------------------
// Finite posets, as relation matrices on 0..n-1

using Relation = std::vector<std::vector<bool>>;

// Every partial order on n labeled points.
inline std::vector<Relation> all_posets(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Relation r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1) r[pairs[b].first][pairs[b].second] = true;
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i)
      for (std::size_t j = 0; ok && j < n; ++j) {
        if (i != j && r[i][j] && r[j][i]) ok = false;
        for (std::size_t l = 0; ok && l < n; ++l)
          if (r[i][j] && r[j][l] && !r[i][l]) ok = false;
      }
    if (ok) out.push_back(std::move(r));
  }
  return out;
}

// Every function n -> m as a vector of images.
inline std::vector<std::vector<std::size_t>> all_functions(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(n, 0);
  if (m == 0) {
    if (n == 0) out.push_back(f);
    return out;
  }
  while (true) {
    out.push_back(f);
    std::size_t pos = 0;
    while (pos < n && ++f[pos] == m) f[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

}  // namespace hier::oracle
