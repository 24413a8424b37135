#pragma once

// Canonical 2-trees T_a and their duals (colors 0 and 1 swapped), indexed
// by ordinals below the tower of w; classification of 2-forests and
// nested 2-trees against them.

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hier/forest.hpp"
#include "hier/ordinal.hpp"

namespace hier {

enum class Polarity { plain, bar };

inline Forest apply(Polarity p, Forest f) { return p == Polarity::bar ? hier::bar(f) : f; }

// 0, 0(1), 0(1(0)), ...
inline Tree t_flat(std::size_t n, Polarity p = Polarity::plain) {
  int top = p == Polarity::plain ? 0 : 1;
  Tree t = leaf(static_cast<int>((top + n) % 2));
  for (std::size_t i = n; i-- > 0;) t = wrap(Label::color(static_cast<int>((top + i) % 2)), as_forest(t));
  return t;
}

namespace detail {

inline Forest t_plain(const Ordinal& a);

// F*G for a nonempty tree F
inline Forest star(const Forest& f, const Forest& g) { return as_forest(wrap(Label::nested(f), g)); }

inline Forest both(const Ordinal& a) {
  Forest t = t_plain(a);
  return join(t, bar(t));
}

inline Forest t_plain(const Ordinal& a) {
  if (a.is_finite()) return as_forest(t_flat(a.finite_part()));
  const auto& terms = a.terms();
  const OrdinalTerm& last = terms.back();
  Ordinal head = Ordinal::from_terms(std::vector<OrdinalTerm>(terms.begin(), terms.end() - 1));
  if (last.exponent.is_zero()) {
    // successor above w: 0*(T_b | bar T_b)
    return as_forest(wrap(Label::color(0), both(Ordinal::from_terms([&] {
                                                    auto ts = terms;
                                                    if (--ts.back().coefficient == 0) ts.pop_back();
                                                    return ts;
                                                  }()))));
  }
  const Ordinal& g = last.exponent;
  Forest tg = t_plain(g);
  if (last.coefficient > 1) {
    // T_g * bar T_{head + w^g*(c-1)}
    Ordinal prev = add(head, Ordinal::monomial(g, last.coefficient - 1));
    return star(tg, bar(t_plain(prev)));
  }
  if (head.is_zero()) return as_forest(wrap(Label::nested(tg), {}));
  return star(tg, both(head));
}

}  // namespace detail

inline Forest t_nested(const Ordinal& a, Polarity p = Polarity::plain) { return apply(p, detail::t_plain(a)); }

// ---------------------------------------------------------------------------
// Names

struct CanonicalName {
  enum class Kind { T, Tbar, TjoinTbar };
  Kind kind;
  Ordinal index;
};

inline bool operator==(const CanonicalName& a, const CanonicalName& b) {
  return a.kind == b.kind && a.index == b.index;
}

inline std::string kind_name(CanonicalName::Kind k) {
  switch (k) {
    case CanonicalName::Kind::T: return "T";
    case CanonicalName::Kind::Tbar: return "Tbar";
    case CanonicalName::Kind::TjoinTbar: return "T|Tbar";
  }
  return "";
}

inline std::string to_string(const CanonicalName& n) { return kind_name(n.kind) + "_" + to_string(n.index); }

inline Forest representative(const CanonicalName& n) {
  switch (n.kind) {
    case CanonicalName::Kind::T: return t_nested(n.index);
    case CanonicalName::Kind::Tbar: return t_nested(n.index, Polarity::bar);
    case CanonicalName::Kind::TjoinTbar: return join(t_nested(n.index), t_nested(n.index, Polarity::bar));
  }
  return {};
}

// ---------------------------------------------------------------------------
// Flat 2-forests

namespace detail {

// most color changes along a root-to-leaf path
inline std::size_t alternations(const Tree& t) {
  std::size_t best = 0;
  for (const auto& c : t.children.trees)
    best = std::max(best, alternations(c) + (c.label.color() != t.label.color() ? 1 : 0));
  return best;
}

}  // namespace detail

inline CanonicalName classify_2forest(const Forest& f) {
  if (f.empty()) throw std::invalid_argument("classify needs a nonempty forest");
  check_colors(f, 2);
  if (total_size(f) != node_count(f)) throw std::invalid_argument("classify expects a flat forest");
  std::size_t top = 0;
  bool plain = false, dual = false;
  for (const auto& t : f.trees) {
    std::size_t a = detail::alternations(t);
    if (a > top) {
      top = a;
      plain = dual = false;
    }
    if (a == top) (t.label.color() == 0 ? plain : dual) = true;
  }
  CanonicalName name{plain && dual ? CanonicalName::Kind::TjoinTbar
                                   : (plain ? CanonicalName::Kind::T : CanonicalName::Kind::Tbar),
                     Ordinal::finite(top)};
  if (!h_equiv(representative(name), f)) throw std::logic_error("classification failed to verify");
  return name;
}

// ---------------------------------------------------------------------------
// Nested 2-trees

namespace detail {

// total_size(t_nested(a)) without building the tree
inline std::size_t canonical_size(const Ordinal& a, std::map<Ordinal, std::size_t>& memo) {
  if (a.is_finite()) return a.finite_part() + 1;
  auto it = memo.find(a);
  if (it != memo.end()) return it->second;
  const auto& terms = a.terms();
  const OrdinalTerm& last = terms.back();
  Ordinal head = Ordinal::from_terms(std::vector<OrdinalTerm>(terms.begin(), terms.end() - 1));
  std::size_t s;
  if (last.exponent.is_zero()) {
    auto ts = terms;
    if (--ts.back().coefficient == 0) ts.pop_back();
    s = 1 + 2 * canonical_size(Ordinal::from_terms(ts), memo);
  } else {
    std::size_t label = canonical_size(last.exponent, memo);
    if (last.coefficient > 1)
      s = 1 + label + canonical_size(add(head, Ordinal::monomial(last.exponent, last.coefficient - 1)), memo);
    else
      s = 1 + label + (head.is_zero() ? 0 : 2 * canonical_size(head, memo));
  }
  memo.emplace(a, s);
  return s;
}

}  // namespace detail

// Every ordinal a whose canonical tree has total size at most bound,
// ascending.
inline std::vector<Ordinal> ordinals_up_to_size(std::size_t bound) {
  std::map<Ordinal, std::size_t> memo;
  auto measure = [&](const Ordinal& a) { return detail::canonical_size(a, memo); };
  std::set<Ordinal> found;
  for (std::size_t n = 0; n + 1 <= bound; ++n) found.insert(Ordinal::finite(n));
  // exponents need strictly smaller trees, so grow to a fixpoint
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Ordinal> exps;
    for (const auto& g : found)
      if (!g.is_zero() && measure(g) < bound) exps.push_back(g);
    std::sort(exps.begin(), exps.end(), std::greater<>());
    // a longer CNF or a larger coefficient never shrinks the tree
    std::function<void(const std::vector<OrdinalTerm>&, std::size_t)> extend =
        [&](const std::vector<OrdinalTerm>& terms, std::size_t from) {
          for (std::size_t i = from; i <= exps.size(); ++i) {
            bool finite_tail = i == exps.size();
            if (finite_tail && terms.empty()) break;
            for (std::uint64_t c = 1;; ++c) {
              auto ts = terms;
              ts.push_back(OrdinalTerm{finite_tail ? Ordinal{} : exps[i], c});
              Ordinal a = Ordinal::from_terms(ts);
              if (measure(a) > bound) break;
              if (found.insert(a).second) grew = true;
              extend(ts, i + 1);
            }
          }
        };
    extend({}, 0);
  }
  return {found.begin(), found.end()};
}

// Searches ordinals with canonical tree of size <= bound; none when the
// bound is too small.  T_a or its dual sits below a member of the family
// exactly when a is at most its index, so the last candidate passing
// that test is the only one worth checking.
inline std::optional<CanonicalName> classify_2tree_nested(const Forest& t, std::size_t bound) {
  if (t.trees.size() != 1) throw std::invalid_argument("classify expects a single tree");
  check_colors(t, 2);
  static std::mutex lock;
  static std::map<std::size_t, std::vector<Ordinal>> cache;
  std::vector<Ordinal> ords;
  {
    std::lock_guard guard(lock);
    auto it = cache.find(bound);
    if (it == cache.end()) it = cache.emplace(bound, ordinals_up_to_size(bound)).first;
    ords = it->second;
  }
  auto below = [&](const Ordinal& a) {
    Forest ta = t_nested(a);
    return h_leq(ta, t) || h_leq(bar(ta), t);
  };
  std::size_t lo = 0, hi = ords.size();  // below holds on [0, lo), fails on [hi, end)
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (below(ords[mid]))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == 0) return std::nullopt;
  const Ordinal& a = ords[lo - 1];
  if (h_equiv(t_nested(a), t)) return CanonicalName{CanonicalName::Kind::T, a};
  if (h_equiv(t_nested(a, Polarity::bar), t)) return CanonicalName{CanonicalName::Kind::Tbar, a};
  return std::nullopt;
}

}  // namespace hier
