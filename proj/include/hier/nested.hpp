#pragma once

// Iterated forests: nesting level, the s / l maps between adjacent levels,
// and the translation to k-labeled n-preorders (flatten / unflatten).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hier/forest.hpp"

namespace hier {

using Relation = std::vector<std::vector<bool>>;

// A finite set 0..size-1 with n preorders and a coloring.  tuples is only
// filled by flatten and records the node path of each element.
struct LabeledNPreorder {
  std::vector<Relation> layers;
  std::vector<int> labels;
  std::vector<std::vector<std::size_t>> tuples;

  std::size_t size() const { return labels.size(); }
  std::size_t depth() const { return layers.size(); }
  bool leq(std::size_t layer, std::size_t x, std::size_t y) const { return layers[layer][x][y]; }
  bool equiv(std::size_t layer, std::size_t x, std::size_t y) const { return leq(layer, x, y) && leq(layer, y, x); }
};

class LayerError : public std::domain_error {
 public:
  LayerError(std::size_t layer, const std::string& what) : std::domain_error(what), layer_(layer) {}
  std::size_t layer() const { return layer_; }

 private:
  std::size_t layer_;
};

// ---------------------------------------------------------------------------
// Levels and the s / l maps

inline std::size_t nesting_level(const Forest& f);

inline std::size_t nesting_level(const Label& l) { return l.is_color() ? 0 : nesting_level(l.forest()); }

inline std::size_t nesting_level(const Forest& f) {
  if (f.empty()) return 0;
  std::size_t deepest = 0;
  std::function<void(const Forest&)> walk = [&](const Forest& g) {
    for (const auto& t : g.trees) {
      deepest = std::max(deepest, nesting_level(t.label));
      walk(t.children);
    }
  };
  walk(f);
  return deepest + 1;
}

inline Forest s_embed(const Label& q) { return as_forest(Tree{q, {}}); }

inline Forest s_embed(const Forest& q) { return s_embed(Label::nested(q)); }

// Join of all labels of P.  Color labels count as the singleton forest.
inline Forest l_join(const Forest& p) {
  if (nesting_level(p) < 2) throw std::domain_error("l_join needs a forest of level at least 2");
  std::vector<Forest> parts;
  std::function<void(const Forest&)> walk = [&](const Forest& g) {
    for (const auto& t : g.trees) {
      parts.push_back(t.label.is_color() ? as_forest(leaf(t.label.color())) : t.label.forest());
      walk(t.children);
    }
  };
  walk(p);
  return join_many(parts);
}

// ---------------------------------------------------------------------------
// flatten

namespace detail {

struct PathElement {
  std::vector<std::size_t> ids;     // globally unique node id per layer
  std::vector<std::size_t> local;   // preorder position inside its own forest
  int color = 0;
};

class Flattener {
 public:
  explicit Flattener(std::size_t n) : n_(n) {}

  LabeledNPreorder run(const Forest& f) {
    std::vector<std::size_t> ids, local;
    visit(f, 0, ids, local);
    LabeledNPreorder x;
    std::size_t m = elems_.size();
    x.layers.assign(n_, Relation(m, std::vector<bool>(m, false)));
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) x.layers[j][a][b] = leq(j, elems_[a], elems_[b]);
    for (auto& e : elems_) {
      x.labels.push_back(e.color);
      x.tuples.push_back(e.local);
    }
    return x;
  }

 private:
  bool leq(std::size_t j, const PathElement& a, const PathElement& b) const {
    for (std::size_t i = 0; i < j; ++i)
      if (a.ids[i] != b.ids[i]) return false;
    // the root is the largest node, so a sits below its ancestors
    const auto& up = above_[a.ids[j]];
    return std::find(up.begin(), up.end(), b.ids[j]) != up.end();
  }

  void visit(const Forest& f, std::size_t layer, std::vector<std::size_t>& ids, std::vector<std::size_t>& local) {
    std::size_t pos = 0;
    std::vector<std::size_t> chain;
    walk(f, layer, ids, local, chain, pos);
  }

  void walk(const Forest& f, std::size_t layer, std::vector<std::size_t>& ids, std::vector<std::size_t>& local,
            std::vector<std::size_t>& chain, std::size_t& pos) {
    for (const auto& t : f.trees) {
      std::size_t id = above_.size();
      chain.push_back(id);
      above_.push_back(chain);
      ids.push_back(id);
      local.push_back(pos++);
      if (layer + 1 == n_) {
        elems_.push_back(PathElement{ids, local, t.label.color()});
      } else if (t.label.is_color()) {
        // pad: color i stands for the singleton forest s(i)
        visit(as_forest(leaf(t.label.color())), layer + 1, ids, local);
      } else {
        visit(t.label.forest(), layer + 1, ids, local);
      }
      ids.pop_back();
      local.pop_back();
      walk(t.children, layer, ids, local, chain, pos);
      chain.pop_back();
    }
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> above_;  // ancestors of each node id, self included
  std::vector<PathElement> elems_;
};

}  // namespace detail

// Elements are paths p_0, p_1, ..., p_{n-1}: a node of P, a node of its
// label, and so on; labels shallower than n are padded with s.
inline LabeledNPreorder flatten(const Forest& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("flatten needs at least one layer");
  std::size_t level = nesting_level(p);
  if (level > n)
    throw std::domain_error("forest has nesting level " + std::to_string(level) + ", more than " + std::to_string(n));
  return detail::Flattener(n).run(p);
}

// ---------------------------------------------------------------------------
// unflatten

// Throws std::invalid_argument when X is not a k-labeled n-preorder.
inline void validate(const LabeledNPreorder& x) {
  std::size_t m = x.size(), n = x.depth();
  if (n == 0) throw std::invalid_argument("no layers");
  for (std::size_t j = 0; j < n; ++j) {
    const auto& r = x.layers[j];
    if (r.size() != m) throw std::invalid_argument("layer " + std::to_string(j) + " has the wrong size");
    for (const auto& row : r)
      if (row.size() != m) throw std::invalid_argument("layer " + std::to_string(j) + " has the wrong size");
    for (std::size_t a = 0; a < m; ++a) {
      if (!r[a][a]) throw std::invalid_argument("layer " + std::to_string(j) + " is not reflexive");
      for (std::size_t b = 0; b < m; ++b) {
        if (j + 1 == n && a != b && r[a][b] && r[b][a])
          throw std::invalid_argument("last layer is not antisymmetric");
        if (j > 0 && r[a][b] && !x.equiv(j - 1, a, b))
          throw std::invalid_argument("layer " + std::to_string(j) + " relates points split by layer " +
                                      std::to_string(j - 1));
        for (std::size_t c = 0; c < m; ++c)
          if (r[a][b] && r[b][c] && !r[a][c])
            throw std::invalid_argument("layer " + std::to_string(j) + " is not transitive");
      }
    }
  }
  for (int c : x.labels)
    if (c < 0) throw std::invalid_argument("negative label");
}

namespace detail {

inline Forest unflatten_part(const LabeledNPreorder& x, const std::vector<std::size_t>& part, std::size_t layer) {
  // classes of the layer's equivalence, in order of first appearance
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t e : part) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& c) { return x.equiv(layer, c[0], e); });
    if (it == classes.end())
      classes.push_back({e});
    else
      it->push_back(e);
  }
  std::size_t q = classes.size();
  auto below = [&](std::size_t a, std::size_t b) { return a != b && x.leq(layer, classes[a][0], classes[b][0]); };
  // quotient must be a forest with roots on top: the classes strictly
  // above any class form a chain
  std::vector<int> parent(q, -1);
  for (std::size_t b = 0; b < q; ++b) {
    std::vector<std::size_t> up;
    for (std::size_t a = 0; a < q; ++a)
      if (below(b, a)) up.push_back(a);
    for (std::size_t i = 0; i < up.size(); ++i)
      for (std::size_t j = i + 1; j < up.size(); ++j)
        if (!below(up[i], up[j]) && !below(up[j], up[i]))
          throw LayerError(layer, "layer " + std::to_string(layer) + " is not a forest");
    // the parent is the lowest class above
    for (std::size_t a : up)
      if (parent[b] < 0 || below(a, static_cast<std::size_t>(parent[b]))) parent[b] = static_cast<int>(a);
  }
  std::vector<Label> labels;
  for (const auto& c : classes)
    labels.push_back(layer + 1 == x.depth() ? Label::color(x.labels[c[0]]) : Label::nested(unflatten_part(x, c, layer + 1)));
  std::function<Tree(std::size_t)> build = [&](std::size_t b) {
    Tree t{labels[b], {}};
    for (std::size_t a = 0; a < q; ++a)
      if (parent[a] == static_cast<int>(b)) t.children.trees.push_back(build(a));
    return t;
  };
  Forest out;
  for (std::size_t b = 0; b < q; ++b)
    if (parent[b] < 0) out.trees.push_back(build(b));
  return out;
}

}  // namespace detail

inline Forest unflatten(const LabeledNPreorder& x) {
  validate(x);
  std::vector<std::size_t> all(x.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return detail::unflatten_part(x, all, 0);
}

// ---------------------------------------------------------------------------
// Morphisms of labeled n-preorders

// A color-preserving map monotone in every layer, searched by backtracking.
inline bool morphism_exists(const LabeledNPreorder& x, const LabeledNPreorder& y) {
  if (x.depth() != y.depth()) throw std::invalid_argument("n-preorders of different depth");
  std::size_t m = x.size(), n = x.depth();
  if (m == 0) return true;
  std::vector<std::vector<std::size_t>> cand(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < y.size(); ++b)
      if (x.labels[a] == y.labels[b]) cand[a].push_back(b);
    if (cand[a].empty()) return false;
  }
  std::vector<std::size_t> img(m);
  std::function<bool(std::size_t)> go = [&](std::size_t a) {
    if (a == m) return true;
    for (std::size_t b : cand[a]) {
      bool ok = true;
      for (std::size_t prev = 0; ok && prev <= a; ++prev) {
        std::size_t fb = prev == a ? b : img[prev];
        for (std::size_t j = 0; ok && j < n; ++j) {
          if (x.leq(j, prev, a) && !y.leq(j, fb, b)) ok = false;
          if (x.leq(j, a, prev) && !y.leq(j, b, fb)) ok = false;
        }
      }
      if (!ok) continue;
      img[a] = b;
      if (go(a + 1)) return true;
    }
    return false;
  };
  return go(0);
}

}  // namespace hier
