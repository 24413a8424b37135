#pragma once

// P-families of sets over a base (flat forests) or an omega-base (nested
// forests), the partitions they define, and membership in the levels of
// the difference and fine hierarchies of k-partitions.
//
// Trees are ordered with the root on top: the component of a node p is
// B_p minus the sets of the nodes strictly below p.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hier/canonical.hpp"
#include "hier/nested.hpp"
#include "hier/space.hpp"

namespace hier {

// Node address: preorder positions, one per layer, as in flatten.
using Path = std::vector<std::size_t>;

struct PFamily {
  Forest forest;
  std::size_t layers = 1;
  std::map<Path, PointSet> sets;
};

inline std::string path_to_string(const Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "." : "") + std::to_string(p[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Layout: the nodes of each layer with their positions and strict
// descendants, plus the forest each node carries one layer down.

namespace detail {

struct LayoutForest;

struct LayoutNode {
  Path path;
  std::vector<std::size_t> below;  // strict descendants, by index
  int color = -1;                  // last layer only
  std::shared_ptr<LayoutForest> inner;
};

struct LayoutForest {
  Path prefix;                    // the node carrying this forest as its label
  std::vector<LayoutNode> nodes;  // preorder
};

inline std::shared_ptr<LayoutForest> layout(const Forest& f, std::size_t layer, std::size_t n, const Path& prefix) {
  auto out = std::make_shared<LayoutForest>();
  out->prefix = prefix;
  std::vector<std::size_t> open;  // ancestors of the node being visited
  std::function<void(const Forest&)> walk = [&](const Forest& g) {
    for (const auto& t : g.trees) {
      std::size_t id = out->nodes.size();
      for (std::size_t a : open) out->nodes[a].below.push_back(id);
      LayoutNode node;
      node.path = prefix;
      node.path.push_back(id);
      if (layer + 1 == n) {
        if (!t.label.is_color()) throw std::invalid_argument("forest is nested deeper than the family");
        node.color = t.label.color();
      } else {
        node.inner = layout(t.label.is_color() ? as_forest(leaf(t.label.color())) : t.label.forest(), layer + 1, n,
                            node.path);
      }
      out->nodes.push_back(std::move(node));
      open.push_back(id);
      walk(t.children);
      open.pop_back();
    }
  };
  walk(f);
  return out;
}

inline std::size_t family_layers(const Forest& f) { return std::max<std::size_t>(1, nesting_level(f)); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Evaluation

struct FamilyOutcome {
  std::optional<KPartition> partition;
  std::vector<int> partial;  // labels on the covered points, -1 elsewhere; empty on conflict
  std::string diagnostic;    // why no partition is defined
};

// Components of the family and the partition they define over `points`.
// Missing sets, sets outside the (omega-)base and broken chain conditions
// throw std::invalid_argument.
inline FamilyOutcome family_defines(const PFamily& fam, std::size_t points, const OmegaBase* bases = nullptr) {
  if (fam.layers < detail::family_layers(fam.forest))
    throw std::invalid_argument("family has fewer layers than the forest's nesting level");
  if (bases && bases->levels.size() < fam.layers) throw std::invalid_argument("omega-base has too few levels");
  auto root = detail::layout(fam.forest, 0, fam.layers, {});
  struct Component {
    Path path;
    PointSet set;
    int color;
  };
  std::vector<Component> comps;
  std::function<void(const detail::LayoutForest&, std::size_t, std::optional<PointSet>)> eval =
      [&](const detail::LayoutForest& lf, std::size_t layer, std::optional<PointSet> expect) {
        std::vector<PointSet> b;
        PointSet all = 0;
        for (const auto& node : lf.nodes) {
          auto it = fam.sets.find(node.path);
          if (it == fam.sets.end()) throw std::invalid_argument("no set for node " + path_to_string(node.path));
          if (!subset_of(it->second, full_set(points)))
            throw std::invalid_argument("set of node " + path_to_string(node.path) + " leaves the space");
          if (bases && !bases->levels[layer].contains(it->second))
            throw std::invalid_argument("set of node " + path_to_string(node.path) + " is not in base level " +
                                        std::to_string(layer));
          b.push_back(it->second);
          all |= it->second;
        }
        if (expect && all != *expect)
          throw std::invalid_argument("sets inside node " + path_to_string(lf.prefix) + " do not cover its component");
        for (std::size_t i = 0; i < lf.nodes.size(); ++i) {
          PointSet lower = 0;
          for (std::size_t q : lf.nodes[i].below) lower |= b[q];
          PointSet comp = b[i] & ~lower;
          if (lf.nodes[i].inner)
            eval(*lf.nodes[i].inner, layer + 1, comp);
          else
            comps.push_back({lf.nodes[i].path, comp, lf.nodes[i].color});
        }
      };
  eval(*root, 0, std::nullopt);
  KPartition part{std::vector<int>(points, -1)};
  std::vector<const Component*> owner(points, nullptr);
  for (const auto& c : comps)
    for (auto x : members(c.set)) {
      if (owner[x] && owner[x]->color != c.color)
        return {std::nullopt, {}, "components of " + path_to_string(owner[x]->path) + " and " + path_to_string(c.path) +
                                  " meet at point " + std::to_string(x) + " with labels " +
                                  std::to_string(owner[x]->color) + " and " + std::to_string(c.color)};
      owner[x] = &c;
      part.labels[x] = c.color;
    }
  for (std::size_t x = 0; x < points; ++x)
    if (part.labels[x] < 0) return {std::nullopt, part.labels, "point " + std::to_string(x) + " is not covered"};
  return {part, part.labels, ""};
}

// ---------------------------------------------------------------------------
// Membership search

enum class FamilyKind { any, monotone, reduced };

namespace detail {

// Assigns sets layer by layer.  Within a forest, nodes are visited in
// reverse preorder so everything below a node already has its set and the
// node's component is known when the node is placed.
class FamilySearch {
 public:
  FamilySearch(const OmegaBase& bases, const KPartition& target, FamilyKind kind)
      : bases_(bases), target_(target), kind_(kind) {}

  using Assignment = std::map<Path, PointSet>;

  std::optional<Assignment> solve(const LayoutForest& lf, std::size_t layer, PointSet cover) {
    auto key = std::make_pair(&lf, cover);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<PointSet> cand;
    for (PointSet s : bases_.levels[layer].sets)
      if (subset_of(s, cover)) cand.push_back(s);
    std::size_t n = lf.nodes.size();
    std::vector<PointSet> b(n, 0);
    std::vector<Assignment> inner(n);
    std::optional<Assignment> found;
    std::function<bool(std::size_t, PointSet)> place = [&](std::size_t left, PointSet used) -> bool {
      if (left == 0) {
        if (used != cover) return false;
        Assignment out;
        for (std::size_t i = 0; i < n; ++i) {
          out[lf.nodes[i].path] = b[i];
          out.insert(inner[i].begin(), inner[i].end());
        }
        found = std::move(out);
        return true;
      }
      std::size_t i = left - 1;
      const LayoutNode& node = lf.nodes[i];
      PointSet lower = 0;
      for (std::size_t q : node.below) lower |= b[q];
      for (PointSet s : cand) {
        if (kind_ != FamilyKind::any && !subset_of(lower, s)) continue;
        if (kind_ == FamilyKind::reduced && !disjoint_from_others(lf, i, s, b)) continue;
        PointSet comp = s & ~lower;
        if (node.inner) {
          auto sub = solve(*node.inner, layer + 1, comp);
          if (!sub) continue;
          inner[i] = *sub;
        } else if (!subset_of(comp, target_.part(node.color))) {
          continue;
        }
        b[i] = s;
        if (place(left - 1, used | s)) return true;
      }
      return false;
    };
    if (n == 0) {
      if (cover == 0) found = Assignment{};
    } else {
      place(n, 0);
    }
    memo_[key] = found;
    return found;
  }

 private:
  // nodes already placed that are not below i are incomparable with it
  static bool disjoint_from_others(const LayoutForest& lf, std::size_t i, PointSet s, const std::vector<PointSet>& b) {
    const auto& below = lf.nodes[i].below;
    for (std::size_t q = i + 1; q < lf.nodes.size(); ++q)
      if (std::find(below.begin(), below.end(), q) == below.end() && (b[q] & s)) return false;
    return true;
  }

  const OmegaBase& bases_;
  const KPartition& target_;
  FamilyKind kind_;
  std::map<std::pair<const LayoutForest*, PointSet>, std::optional<Assignment>> memo_;
};

}  // namespace detail

// A family of the requested kind over the omega-base defining A on the
// whole space, if one exists.  Uses as many levels as P is nested.
inline std::optional<PFamily> find_family(const KPartition& a, const Forest& p, const OmegaBase& ll,
                                          FamilyKind kind = FamilyKind::monotone) {
  std::size_t n = detail::family_layers(p);
  if (ll.levels.size() < n)
    throw std::domain_error("forest has nesting level " + std::to_string(n) + " but the omega-base has " +
                            std::to_string(ll.levels.size()) + " levels");
  if (a.points() != ll.points()) throw std::invalid_argument("partition and base live on different spaces");
  auto lf = detail::layout(p, 0, n, {});
  detail::FamilySearch search(ll, a, kind);
  auto sets = search.solve(*lf, 0, full_set(a.points()));
  if (!sets) return std::nullopt;
  return PFamily{p, n, std::move(*sets)};
}

inline bool fh_membership(const KPartition& a, const Forest& p, const OmegaBase& ll,
                          FamilyKind kind = FamilyKind::monotone) {
  return find_family(a, p, ll, kind).has_value();
}

inline bool dh_membership(const KPartition& a, const Forest& p, const Base& l, FamilyKind kind = FamilyKind::monotone) {
  if (nesting_level(p) > 1) throw std::invalid_argument("difference hierarchy needs a flat forest");
  return fh_membership(a, p, OmegaBase{{l}}, kind);
}

// Indices into all_partitions(points, k) of the members of level P.
inline std::vector<std::size_t> level_set(const Forest& p, const OmegaBase& ll, int k,
                                          FamilyKind kind = FamilyKind::monotone) {
  std::vector<std::size_t> out;
  auto parts = all_partitions(ll.points(), k);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (fh_membership(parts[i], p, ll, kind)) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Families over T_n and difference sequences

namespace detail {

inline void require_chain_family(const PFamily& fam, std::size_t& n) {
  n = node_count(fam.forest);
  if (n == 0 || fam.layers != 1 || !(fam.forest == as_forest(t_flat(n - 1))))
    throw std::invalid_argument("family is not over a plain canonical chain");
  --n;
}

}  // namespace detail

// A_b collects the sets of nodes of rank <= b whose color is 0 when b
// has the parity of n and 1 otherwise; D_n of the result is the part
// labeled 1.
inline std::vector<PointSet> family_to_diff_sequence(const PFamily& fam) {
  std::size_t n;
  detail::require_chain_family(fam, n);
  std::vector<PointSet> seq(n, 0);
  for (std::size_t b = 0; b < n; ++b) {
    int color = (b % 2 == n % 2) ? 0 : 1;
    // node at depth d has rank n - d and color d % 2
    for (std::size_t d = 0; d <= n; ++d)
      if (n - d <= b && static_cast<int>(d % 2) == color) seq[b] |= fam.sets.at(Path{d});
  }
  return seq;
}

// Root gets the whole space, the node of rank r gets A_r.
inline PFamily diff_sequence_to_family(const std::vector<PointSet>& seq, const Base& l) {
  PointSet all = full_set(l.points);
  if (!l.contains(all)) throw std::invalid_argument("base lacks the whole space");
  for (PointSet s : seq)
    if (!l.contains(s)) throw std::invalid_argument("set " + set_to_string(s) + " is not in the base");
  std::size_t n = seq.size();
  PFamily fam{as_forest(t_flat(n)), 1, {}};
  for (std::size_t d = 0; d <= n; ++d) fam.sets[Path{d}] = d == 0 ? all : seq[n - d];
  return fam;
}

// ---------------------------------------------------------------------------
// Monotone and reduced families

inline bool is_monotone(const PFamily& fam) {
  auto root = detail::layout(fam.forest, 0, fam.layers, {});
  std::function<bool(const detail::LayoutForest&)> check = [&](const detail::LayoutForest& lf) {
    for (const auto& node : lf.nodes) {
      for (std::size_t q : node.below)
        if (!subset_of(fam.sets.at(lf.nodes[q].path), fam.sets.at(node.path))) return false;
      if (node.inner && !check(*node.inner)) return false;
    }
    return true;
  };
  return check(*root);
}

inline bool is_reduced(const PFamily& fam) {
  if (!is_monotone(fam)) return false;
  auto root = detail::layout(fam.forest, 0, fam.layers, {});
  std::function<bool(const detail::LayoutForest&)> check = [&](const detail::LayoutForest& lf) {
    for (std::size_t i = 0; i < lf.nodes.size(); ++i) {
      const auto& bi = lf.nodes[i].below;
      for (std::size_t j = i + 1; j < lf.nodes.size(); ++j) {
        bool comparable = std::find(bi.begin(), bi.end(), j) != bi.end();
        if (!comparable && (fam.sets.at(lf.nodes[i].path) & fam.sets.at(lf.nodes[j].path))) return false;
      }
      if (lf.nodes[i].inner && !check(*lf.nodes[i].inner)) return false;
    }
    return true;
  };
  return check(*root);
}

// Same partial partition from a monotone reduced family.  Each layer is
// first made monotone (a node takes the union of its subtree), then
// siblings are split top down with the reduction property and everything
// under a node is cut down to the node's new set; a node's inner family
// is cut down to its new component.
inline PFamily reduce_family(const PFamily& fam, const OmegaBase& ll) {
  if (ll.levels.size() < fam.layers) throw std::invalid_argument("omega-base has too few levels");
  for (std::size_t j = 0; j < fam.layers; ++j)
    if (!has_reduction_property(ll.levels[j]))
      throw std::domain_error("base level " + std::to_string(j) + " lacks the reduction property");
  PFamily out = fam;
  auto root = detail::layout(fam.forest, 0, fam.layers, {});
  std::function<void(const detail::LayoutForest&, std::size_t, std::optional<PointSet>)> fix =
      [&](const detail::LayoutForest& lf, std::size_t layer, std::optional<PointSet> within) {
        const Base& l = ll.levels[layer];
        std::size_t n = lf.nodes.size();
        std::vector<PointSet> b(n);
        for (std::size_t i = 0; i < n; ++i) b[i] = out.sets.at(lf.nodes[i].path) & within.value_or(~PointSet{0});
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t q : lf.nodes[i].below) b[i] |= b[q];
        // children of each node (and the roots), in preorder
        // preorder reaches ancestors top down, so the last one is the parent
        std::vector<int> parent(n, -1);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t q : lf.nodes[i].below) parent[q] = static_cast<int>(i);
        std::function<void(int)> split = [&](int p) {
          std::vector<std::size_t> kids;
          for (std::size_t i = 0; i < n; ++i)
            if (parent[i] == p) kids.push_back(i);
          std::vector<PointSet> sets;
          for (auto c : kids) sets.push_back(b[c]);
          auto red = reduce_sequence(l, sets);
          if (!red) throw std::logic_error("reduction failed on a base with the reduction property");
          for (std::size_t j = 0; j < kids.size(); ++j) {
            b[kids[j]] = (*red)[j];
            for (std::size_t q : lf.nodes[kids[j]].below) b[q] &= (*red)[j];
          }
          for (auto c : kids) split(static_cast<int>(c));
        };
        split(-1);
        for (std::size_t i = 0; i < n; ++i) {
          out.sets[lf.nodes[i].path] = b[i];
          if (lf.nodes[i].inner) {
            PointSet lower = 0;
            for (std::size_t q : lf.nodes[i].below) lower |= b[q];
            fix(*lf.nodes[i].inner, layer + 1, b[i] & ~lower);
          }
        }
      };
  fix(*root, 0, std::nullopt);
  return out;
}

}  // namespace hier
