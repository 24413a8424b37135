#pragma once

// Finite labeled forests under the h-preorder.
//
// A node label is either a color 0..k-1 or a nested (nonempty) forest; a
// color i is identified with the singleton forest s(i), so flat and nested
// forests live in one type.  The empty forest is the bottom element.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hier {

struct Tree;

struct Forest {
  std::vector<Tree> trees;

  static Forest bottom() { return {}; }
  bool empty() const { return trees.empty(); }
  std::size_t size() const { return trees.size(); }
};

class Label {
 public:
  static Label color(int c) {
    if (c < 0) throw std::invalid_argument("negative color");
    Label l;
    l.v_ = c;
    return l;
  }
  // Nested label.  A singleton leaf forest collapses to its color so that
  // i and s(i) share one representation.
  static Label nested(Forest f);

  bool is_color() const { return std::holds_alternative<int>(v_); }
  int color() const { return std::get<int>(v_); }
  const Forest& forest() const { return std::get<Forest>(v_); }

 private:
  std::variant<int, Forest> v_ = 0;
};

struct Tree {
  Label label;
  Forest children;
};

inline Label Label::nested(Forest f) {
  if (f.empty()) throw std::invalid_argument("a nested label must be a nonempty forest");
  if (f.trees.size() == 1 && f.trees[0].children.empty() && f.trees[0].label.is_color())
    return color(f.trees[0].label.color());
  Label l;
  l.v_ = std::move(f);
  return l;
}

// ---------------------------------------------------------------------------
// Construction

inline Tree leaf(int c) { return Tree{Label::color(c), {}}; }

inline Tree wrap(Label label, Forest children) { return Tree{std::move(label), std::move(children)}; }

inline Forest as_forest(Tree t) {
  Forest f;
  f.trees.push_back(std::move(t));
  return f;
}

inline Forest join(const Forest& a, const Forest& b) {
  Forest r = a;
  r.trees.insert(r.trees.end(), b.trees.begin(), b.trees.end());
  return r;
}

inline Forest join_many(const std::vector<Forest>& parts) {
  Forest r;
  for (const auto& p : parts) r.trees.insert(r.trees.end(), p.trees.begin(), p.trees.end());
  return r;
}

inline const std::vector<Tree>& tree_components(const Forest& f) { return f.trees; }

// ---------------------------------------------------------------------------
// Structural queries

bool operator==(const Forest& a, const Forest& b);

inline bool operator==(const Label& a, const Label& b) {
  if (a.is_color() != b.is_color()) return false;
  return a.is_color() ? a.color() == b.color() : a.forest() == b.forest();
}

inline bool operator==(const Tree& a, const Tree& b) { return a.label == b.label && a.children == b.children; }

inline bool operator==(const Forest& a, const Forest& b) { return a.trees == b.trees; }

std::size_t node_count(const Forest& f);

inline std::size_t node_count(const Tree& t) { return 1 + node_count(t.children); }

// Number of tree nodes at the outer level; labels are not entered.
inline std::size_t node_count(const Forest& f) {
  std::size_t n = 0;
  for (const auto& t : f.trees) n += node_count(t);
  return n;
}

std::size_t total_size(const Forest& f);

// Nodes at every nesting level: each node plus the size of its nested label.
inline std::size_t total_size(const Tree& t) {
  return 1 + (t.label.is_color() ? 0 : total_size(t.label.forest())) + total_size(t.children);
}

inline std::size_t total_size(const Forest& f) {
  std::size_t n = 0;
  for (const auto& t : f.trees) n += total_size(t);
  return n;
}

inline std::size_t rank(const Tree& t) {
  std::size_t r = 0;
  for (const auto& c : t.children.trees) r = std::max(r, 1 + rank(c));
  return r;
}

inline std::size_t rank(const Forest& f) {
  if (f.empty()) throw std::invalid_argument("rank of the empty forest is undefined");
  std::size_t r = 0;
  for (const auto& t : f.trees) r = std::max(r, rank(t));
  return r;
}

int max_color(const Forest& f);

inline int max_color(const Tree& t) {
  int m = t.label.is_color() ? t.label.color() : max_color(t.label.forest());
  return std::max(m, max_color(t.children));
}

inline int max_color(const Forest& f) {
  int m = -1;
  for (const auto& t : f.trees) m = std::max(m, max_color(t));
  return m;
}

// Rejects colors outside 0..k-1.
inline void check_colors(const Forest& f, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (max_color(f) >= k)
    throw std::invalid_argument("color " + std::to_string(max_color(f)) + " out of range for k=" + std::to_string(k));
}

Forest map_colors(const Forest& f, const std::vector<int>& perm);

inline Tree map_colors(const Tree& t, const std::vector<int>& perm) {
  Label l = t.label.is_color() ? Label::color(perm.at(static_cast<std::size_t>(t.label.color())))
                               : Label::nested(map_colors(t.label.forest(), perm));
  return Tree{std::move(l), map_colors(t.children, perm)};
}

// Relabels every color at every nesting level.
inline Forest map_colors(const Forest& f, const std::vector<int>& perm) {
  Forest r;
  for (const auto& t : f.trees) r.trees.push_back(map_colors(t, perm));
  return r;
}

// Swaps colors 0 and 1 everywhere (the bar operation on 2-forests).
inline Forest bar(const Forest& f) {
  std::vector<int> perm(static_cast<std::size_t>(std::max(2, max_color(f) + 1)));
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::swap(perm[0], perm[1]);
  return map_colors(f, perm);
}

// Deterministic structural key used to order components.
std::string structure_key(const Forest& f);

inline std::string structure_key(const Tree& t) {
  std::string s = t.label.is_color() ? std::to_string(t.label.color()) : "[" + structure_key(t.label.forest()) + "]";
  if (!t.children.empty()) s += "(" + structure_key(t.children) + ")";
  return s;
}

inline std::string structure_key(const Forest& f) {
  std::string s;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) s += ",";
    s += structure_key(f.trees[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// h-preorder

namespace detail {

// One search context per top-level query; node addresses are stable while
// the inputs are alive, so they key the memo tables.
class HomSearch {
 public:
  bool forest_leq(const Forest& f, const Forest& g) {
    for (const auto& s : f.trees) {
      bool found = false;
      for (const auto& t : g.trees)
        if (below(s, t)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  }

  bool label_leq(const Label& a, const Label& b) {
    if (a.is_color() && b.is_color()) return a.color() == b.color();
    auto key = std::make_pair(static_cast<const void*>(&a), static_cast<const void*>(&b));
    if (auto it = labels_.find(key); it != labels_.end()) return it->second;
    bool r;
    if (a.is_color()) {
      // s(i) <= G iff some node of G carries a label above i
      r = any_node_above(a, b.forest());
    } else if (b.is_color()) {
      r = all_nodes_below(a.forest(), b);
    } else {
      r = forest_leq(a.forest(), b.forest());
    }
    labels_.emplace(key, r);
    return r;
  }

  // s embeds with its root mapped somewhere in the subtree rooted at t.
  bool below(const Tree& s, const Tree& t) {
    auto key = std::make_pair(&s, &t);
    if (auto it = below_.find(key); it != below_.end()) return it->second;
    bool r = embeds_at(s, t);
    for (std::size_t i = 0; !r && i < t.children.trees.size(); ++i) r = below(s, t.children.trees[i]);
    below_.emplace(key, r);
    return r;
  }

 private:
  bool embeds_at(const Tree& s, const Tree& t) {
    if (!label_leq(s.label, t.label)) return false;
    for (const auto& c : s.children.trees)
      if (!below(c, t)) return false;
    return true;
  }

  bool any_node_above(const Label& a, const Forest& g) {
    for (const auto& t : g.trees)
      if (label_leq(a, t.label) || any_node_above(a, t.children)) return true;
    return false;
  }

  bool all_nodes_below(const Forest& f, const Label& b) {
    for (const auto& t : f.trees)
      if (!label_leq(t.label, b) || !all_nodes_below(t.children, b)) return false;
    return true;
  }

  std::map<std::pair<const Tree*, const Tree*>, bool> below_;
  std::map<std::pair<const void*, const void*>, bool> labels_;
};

}  // namespace detail

inline bool h_leq(const Forest& f, const Forest& g) { return detail::HomSearch{}.forest_leq(f, g); }

inline bool h_leq(const Tree& s, const Tree& t) { return detail::HomSearch{}.below(s, t); }

inline bool h_equiv(const Forest& f, const Forest& g) { return h_leq(f, g) && h_leq(g, f); }

inline bool label_leq(const Label& a, const Label& b) { return detail::HomSearch{}.label_leq(a, b); }

// ---------------------------------------------------------------------------
// Normal form

Forest normalize(const Forest& f);

namespace detail {

// Keeps one representative of each maximal component; drops the rest.
inline std::vector<Tree> drop_subsumed(std::vector<Tree> items) {
  std::vector<Tree> kept;
  for (auto& c : items) {
    bool dominated = false;
    for (const auto& k : kept)
      if (h_leq(c, k)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    std::erase_if(kept, [&](const Tree& k) { return h_leq(k, c); });
    kept.push_back(std::move(c));
  }
  std::sort(kept.begin(), kept.end(),
            [](const Tree& a, const Tree& b) { return structure_key(a) < structure_key(b); });
  return kept;
}

inline Label normalize_label(const Label& l) {
  return l.is_color() ? l : Label::nested(normalize(l.forest()));
}

inline Tree normalize_tree(const Tree& t) {
  Tree r{normalize_label(t.label), {}};
  std::vector<Tree> pending;
  for (const auto& c : t.children.trees) pending.push_back(normalize_tree(c));
  // A child whose label sits below the parent's can be merged into the parent.
  std::vector<Tree> children;
  while (!pending.empty()) {
    Tree c = std::move(pending.back());
    pending.pop_back();
    if (label_leq(c.label, r.label)) {
      for (auto& g : c.children.trees) pending.push_back(std::move(g));
    } else {
      children.push_back(std::move(c));
    }
  }
  r.children.trees = drop_subsumed(std::move(children));
  return r;
}

}  // namespace detail

// Canonical representative of the h-equivalence class.
inline Forest normalize(const Forest& f) {
  std::vector<Tree> comps;
  for (const auto& t : f.trees) comps.push_back(detail::normalize_tree(t));
  return Forest{detail::drop_subsumed(std::move(comps))};
}

inline bool is_join_irreducible(const Forest& f) { return normalize(f).trees.size() == 1; }

// ---------------------------------------------------------------------------
// Meet

namespace detail {

class MeetBuilder {
 public:
  Forest meet(const Forest& f, const Forest& g) {
    Forest r;
    for (const auto& s : f.trees)
      for (const auto& t : g.trees) append(r, tree_meet(s, t));
    return normalize(r);
  }

  // A tree below both s = p(F') and t = q(G') either maps its root onto
  // both roots (label below p and q, rest below s and t) or lies entirely
  // under F' or under G'.
  Forest tree_meet(const Tree& s, const Tree& t) {
    auto key = std::make_pair(&s, &t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Forest under;
    for (const auto& c : s.children.trees) append(under, tree_meet(c, t));
    for (const auto& c : t.children.trees) append(under, tree_meet(s, c));
    under = normalize(under);
    Forest r;
    if (auto m = label_meet(s.label, t.label))
      r = as_forest(wrap(std::move(*m), std::move(under)));
    else
      r = std::move(under);
    memo_.emplace(key, r);
    return r;
  }

  std::optional<Label> label_meet(const Label& a, const Label& b) {
    // everything strictly below a color is empty, so i meets x in i or nothing
    if (a.is_color()) {
      if (label_leq(a, b)) return a;
      return std::nullopt;
    }
    if (b.is_color()) {
      if (label_leq(b, a)) return b;
      return std::nullopt;
    }
    Forest m = meet(a.forest(), b.forest());
    if (m.empty()) return std::nullopt;
    return Label::nested(std::move(m));
  }

 private:
  static void append(Forest& into, const Forest& part) {
    into.trees.insert(into.trees.end(), part.trees.begin(), part.trees.end());
  }

  std::map<std::pair<const Tree*, const Tree*>, Forest> memo_;
};

}  // namespace detail

// Greatest lower bound in the lattice of forests with bottom adjoined.
inline Forest meet(const Forest& f, const Forest& g) { return detail::MeetBuilder{}.meet(f, g); }

}  // namespace hier
