#pragma once

// Acceptance suites A1-A10: exhaustive and sampled checks of the library
// against brute-force oracles and the expected identities.  Shared by the
// acceptance binary and the CLI selftest.

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hier/canonical.hpp"
#include "hier/family.hpp"
#include "hier/nested.hpp"
#include "hier/oracle.hpp"
#include "hier/oracle_space.hpp"
#include "hier/term.hpp"
#include "hier/wadge.hpp"

namespace hier::acceptance {

// Operations under test that a fixture may replace.
struct Ops {
  std::function<Forest(const Forest&, const Forest&)> meet = [](const Forest& f, const Forest& g) {
    return hier::meet(f, g);
  };
};

struct SuiteResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::size_t checks = 0;
  double seconds = 0;
  std::string detail;  // first failure
};

class SuiteFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

class Checker {
 public:
  void operator()(bool ok, const std::function<std::string()>& what) {
    ++count;
    if (!ok) throw SuiteFailure(what());
  }
  std::size_t count = 0;
};

inline std::string show(const Forest& f) { return print_term_raw(f); }

// Distinct normal forms of the given forests with at most max_nodes outer nodes.
inline std::vector<Forest> normal_forms(const std::vector<Forest>& corpus, std::size_t max_nodes = SIZE_MAX,
                                        std::size_t max_total = SIZE_MAX) {
  std::set<std::string> seen;
  std::vector<Forest> out;
  for (const auto& f : corpus) {
    Forest n = normalize(f);
    if (node_count(n) > max_nodes || total_size(n) > max_total) continue;
    if (seen.insert(oracle::canonical_key(n)).second) out.push_back(std::move(n));
  }
  return out;
}

inline bool oracle_equiv(const Forest& f, const Forest& g) {
  return oracle::pruned_h_leq(f, g) && oracle::pruned_h_leq(g, f);
}

inline std::vector<FiniteSpace> spaces_up_to(std::size_t n) {
  std::vector<FiniteSpace> out;
  for (std::size_t m = 1; m <= n; ++m)
    for (auto& x : oracle::all_spaces(m)) out.push_back(std::move(x));
  return out;
}

inline std::vector<bool> level_bits(const Forest& p, const OmegaBase& ll, int k,
                                    FamilyKind kind = FamilyKind::monotone) {
  std::vector<bool> out(all_partitions(ll.points(), k).size());
  for (auto i : level_set(p, ll, k, kind)) out[i] = true;
  return out;
}

// Ordinals with at most two CNF terms, coefficients at most 2, built
// from exponents one notation level down.
inline std::vector<Ordinal> ordinal_layer(const std::vector<Ordinal>& exponents) {
  std::set<Ordinal> out{Ordinal{}};
  std::vector<Ordinal> e(exponents.begin(), exponents.end());
  std::sort(e.begin(), e.end(), std::greater<>());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::uint64_t c = 1; c <= 2; ++c) {
      out.insert(Ordinal::from_terms({OrdinalTerm{e[i], c}}));
      for (std::size_t j = i + 1; j < e.size(); ++j)
        for (std::uint64_t d = 1; d <= 2; ++d) out.insert(Ordinal::from_terms({OrdinalTerm{e[i], c}, OrdinalTerm{e[j], d}}));
    }
  return {out.begin(), out.end()};
}

inline std::vector<Ordinal> a5_ordinals() {
  std::vector<Ordinal> d0{Ordinal::finite(0), Ordinal::finite(1), Ordinal::finite(2)};
  return ordinal_layer(ordinal_layer(d0));
}

// Random term text over colors 0..k-1 using every surface form.
inline std::string random_term(std::mt19937& rng, int k, int depth) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  std::function<std::string(int)> nonempty = [&](int d) -> std::string {
    int choice = d <= 0 ? 0 : pick(6);
    switch (choice) {
      case 0: return std::to_string(pick(k));
      case 1: return nonempty(d - 1) + (pick(2) ? " | " : "⊔") + nonempty(d - 1);
      case 2: return "(" + nonempty(d - 1) + ")*" + (pick(3) ? nonempty(d - 1) : std::string(pick(2) ? "bot" : "⊥"));
      case 3: return std::to_string(pick(k)) + "*" + nonempty(d - 1);
      case 4: return "s(" + nonempty(d - 1) + ")";
      default: return "(" + nonempty(d - 1) + (pick(2) ? "|bot" : "") + ")";
    }
  };
  return pick(20) == 0 ? (pick(2) ? "bot" : "⊥") : nonempty(depth);
}

// ---------------------------------------------------------------------------
// Suites

inline void a1(const Ops&, Checker& check) {
  auto corpus = normal_forms(oracle::flat_forests(6, 3), 6);
  auto nested = normal_forms(oracle::nested_forests(5, 3, 2), SIZE_MAX, 5);
  corpus.insert(corpus.end(), nested.begin(), nested.end());
  corpus = normal_forms(corpus);
  for (const auto& f : corpus)
    for (const auto& g : corpus)
      check(h_leq(f, g) == oracle::pruned_h_leq(f, g), [&] { return "h_leq disagrees on " + show(f) + " vs " + show(g); });
}

inline void a2(const Ops& ops, Checker& check) {
  auto candidates = normal_forms(oracle::flat_forests(6, 3), 6);
  std::size_t nc = candidates.size();
  std::vector<std::vector<char>> le(nc, std::vector<char>(nc));
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j) le[i][j] = oracle::pruned_h_leq(candidates[i], candidates[j]);
  std::vector<std::size_t> corpus;
  for (std::size_t i = 0; i < nc; ++i)
    if (node_count(candidates[i]) <= 5) corpus.push_back(i);
  for (auto a : corpus)
    for (auto b : corpus) {
      const Forest& f = candidates[a];
      const Forest& g = candidates[b];
      Forest m = ops.meet(f, g);
      Forest j = join(f, g);
      check(oracle::pruned_h_leq(m, f) && oracle::pruned_h_leq(m, g),
            [&] { return "meet(" + show(f) + ", " + show(g) + ") = " + show(m) + " is not a lower bound"; });
      check(oracle::pruned_h_leq(f, j) && oracle::pruned_h_leq(g, j),
            [&] { return "join of " + show(f) + ", " + show(g) + " is not an upper bound"; });
      for (std::size_t h = 0; h < nc; ++h) {
        if (le[h][a] && le[h][b])
          check(oracle::pruned_h_leq(candidates[h], m), [&] {
            return "meet(" + show(f) + ", " + show(g) + ") = " + show(m) + " misses lower bound " + show(candidates[h]);
          });
        if (le[a][h] && le[b][h])
          check(oracle::pruned_h_leq(j, candidates[h]),
                [&] { return "join of " + show(f) + ", " + show(g) + " exceeds upper bound " + show(candidates[h]); });
      }
    }
  std::mt19937 rng(20240611);
  for (int s = 0; s < 1000; ++s) {
    Forest f = oracle::random_flat_forest(rng, 5, 3);
    Forest g = oracle::random_flat_forest(rng, 5, 3);
    Forest h = oracle::random_flat_forest(rng, 5, 3);
    check(oracle_equiv(ops.meet(f, join(g, h)), join(ops.meet(f, g), ops.meet(f, h))),
          [&] { return "meet does not distribute over join at " + show(f) + ", " + show(g) + ", " + show(h); });
    check(oracle_equiv(join(f, ops.meet(g, h)), ops.meet(join(f, g), join(f, h))),
          [&] { return "join does not distribute over meet at " + show(f) + ", " + show(g) + ", " + show(h); });
  }
}

inline void a3(const Ops& ops, Checker& check) {
  auto tn = [](std::size_t n, Polarity p = Polarity::plain) { return as_forest(t_flat(n, p)); };
  for (std::size_t n = 0; n <= 6; ++n) {
    Forest t = tn(n), tb = tn(n, Polarity::bar), both = join(t, tb);
    check(!oracle::pruned_h_leq(t, tb) && !oracle::pruned_h_leq(tb, t),
          [&] { return "T_" + std::to_string(n) + " and its dual are comparable"; });
    for (std::size_t m = n + 1; m <= 6; ++m)
      check(oracle::pruned_h_leq(both, tn(m)) && !oracle::pruned_h_leq(tn(m), both),
            [&] { return "T_" + std::to_string(n) + " join dual is not strictly below T_" + std::to_string(m); });
    if (n + 1 <= 6)
      check(oracle_equiv(ops.meet(tn(n + 1), tn(n + 1, Polarity::bar)), both),
            [&] { return "meet of T_" + std::to_string(n + 1) + " and its dual is not T_n join dual"; });
  }
  std::mt19937 rng(4242);
  for (int s = 0; s < 500; ++s) {
    Forest f = oracle::random_flat_forest(rng, 6, 2);
    std::string why;
    try {
      CanonicalName name = classify_2forest(f);
      check(oracle_equiv(representative(name), f), [&] { return "classification of " + show(f) + " is wrong"; });
    } catch (const SuiteFailure&) {
      throw;
    } catch (const std::exception& e) {
      check(false, [&] { return "classify_2forest failed on " + show(f) + ": " + e.what(); });
    }
  }
}

inline void a4(const Ops&, Checker& check) {
  for (const auto& x : spaces_up_to(4)) {
    Base l = up_sets(x);
    for (std::size_t n = 0; n <= 3; ++n) {
      auto image = oracle::difference_image(l, n);
      Forest t = as_forest(t_flat(n));
      for (const auto& a : all_partitions(x.n, 2))
        check(dh_membership(a, t, l) == (image.count(a.part(1)) > 0), [&] {
          return "level of T_" + std::to_string(n) + " disagrees with D_n on partition " + partition_to_string(a) +
                 " of a " + std::to_string(x.n) + "-point space";
        });
    }
  }
}

inline void a5(const Ops& ops, Checker& check) {
  auto ords = a5_ordinals();
  std::vector<Forest> plain, both;
  for (const auto& a : ords) {
    Forest t = t_nested(a), tb = t_nested(a, Polarity::bar);
    check(!h_leq(t, tb) && !h_leq(tb, t), [&] { return "T_" + to_string(a) + " and its dual are comparable"; });
    Ordinal next = succ(a);
    check(h_equiv(ops.meet(t_nested(next), t_nested(next, Polarity::bar)), join(t, tb)),
          [&] { return "meet of T_" + to_string(next) + " and its dual is not T_a join dual"; });
    plain.push_back(std::move(t));
    both.push_back(join(plain.back(), tb));
  }
  for (std::size_t i = 0; i < ords.size(); ++i)
    for (std::size_t j = i + 1; j < ords.size(); ++j)
      check(h_leq(both[i], plain[j]) && !h_leq(plain[j], both[i]), [&] {
        return "T_" + to_string(ords[i]) + " join dual is not strictly below T_" + to_string(ords[j]);
      });
}

inline void a6(const Ops&, Checker& check) {
  for (const auto& f : oracle::nested_forests(5, 3, 3))
    for (std::size_t n = std::max<std::size_t>(1, nesting_level(f)); n <= 3; ++n) {
      auto x = flatten(f, n);
      Forest back = unflatten(x);
      check(h_equiv(back, f), [&] { return "unflatten(flatten(" + show(f) + ")) = " + show(back); });
      auto again = flatten(back, n);
      check(morphism_exists(x, again) && morphism_exists(again, x),
            [&] { return "flatten of the round trip of " + show(f) + " is not equivalent"; });
    }
  auto corpus = oracle::nested_forests(5, 2, 3);
  std::vector<LabeledNPreorder> flat;
  for (const auto& f : corpus) flat.push_back(flatten(f, 3));
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = 0; j < corpus.size(); ++j)
      check(h_leq(corpus[i], corpus[j]) == morphism_exists(flat[i], flat[j]),
            [&] { return "morphisms disagree with h_leq on " + show(corpus[i]) + " vs " + show(corpus[j]); });
}

inline void a7(const Ops&, Checker& check) {
  for (std::size_t n = 1; n <= 5; ++n) {
    check(has_reduction_property(up_sets(chain_space(n))),
          [&] { return "up-sets of the " + std::to_string(n) + "-chain lack reduction"; });
    check(has_reduction_property(powerset(n)), [&] { return "powerset of " + std::to_string(n) + " lacks reduction"; });
  }
  auto diamond = space_from_pairs(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  check(!has_reduction_property(up_sets(diamond)), [] { return "diamond up-sets reported with reduction"; });

  std::vector<Base> bases;
  for (const auto& x : spaces_up_to(3))
    if (has_reduction_property(up_sets(x))) bases.push_back(up_sets(x));
  for (std::size_t n = 1; n <= 3; ++n) bases.push_back(powerset(n));
  auto members = normal_forms(oracle::flat_forests(4, 2), 4);
  auto three = normal_forms(oracle::flat_forests(3, 3), 3);
  std::vector<Forest> nested;
  for (const auto& f : normal_forms(oracle::nested_forests(4, 2, 2)))
    if (nesting_level(f) == 2) nested.push_back(f);
  auto families = three;
  for (const auto& f : normal_forms(oracle::flat_forests(4, 2), 4))
    if (node_count(f) == 4) families.push_back(f);
  for (const auto& l : bases) {
    // nested families only on the smallest spaces
    OmegaBase ob = omega_base_over(l, 2);
    std::vector<std::pair<const Forest*, int>> level_corpus;
    for (const auto& p : members) level_corpus.push_back({&p, 2});
    for (const auto& p : three) level_corpus.push_back({&p, 3});
    if (l.points <= 2)
      for (const auto& p : nested) level_corpus.push_back({&p, 2});
    for (auto [p, k] : level_corpus)
      check(level_bits(*p, ob, k, FamilyKind::any) == level_bits(*p, ob, k, FamilyKind::reduced),
            [&] { return "reduced families change the level of " + show(*p); });
    std::vector<const Forest*> family_corpus;
    for (const auto& p : families) family_corpus.push_back(&p);
    if (l.points <= 2)
      for (const auto& p : nested) family_corpus.push_back(&p);
    for (const Forest* p : family_corpus)
      oracle::any_family(*p, ob, [&](const PFamily& fam) {
        auto before = family_defines(fam, l.points, &ob);
        if (before.partial.empty()) return false;
        auto red = reduce_family(fam, ob);
        check(is_reduced(red), [&] { return "reduce_family output is not reduced for " + show(*p); });
        auto after = family_defines(red, l.points, &ob);
        check(after.partial == before.partial, [&] { return "reduce_family changed the partition for " + show(*p); });
        return false;
      });
  }
}

inline void a8(const Ops& ops, Checker& check) {
  auto flat = normal_forms(oracle::flat_forests(4, 3), 4);
  auto spaces = spaces_up_to(3);
  for (const auto& x : spaces) {
    OmegaBase ob{{up_sets(x)}};
    std::map<std::string, std::vector<bool>> cache;
    auto bits = [&](const Forest& p) {
      auto key = oracle::canonical_key(normalize(p));
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, level_bits(p, ob, 3)).first;
      return it->second;
    };
    for (const auto& f : flat)
      for (const auto& g : flat) {
        auto a = bits(f), b = bits(g), m = bits(ops.meet(f, g));
        bool le = h_leq(f, g);
        for (std::size_t t = 0; t < a.size(); ++t) {
          check(!le || !a[t] || b[t], [&] { return "level of " + show(f) + " not inside level of " + show(g); });
          check(m[t] == (a[t] && b[t]),
                [&] { return "level of meet(" + show(f) + ", " + show(g) + ") is not the intersection"; });
        }
      }
  }
  std::vector<Forest> nested;
  for (const auto& f : normal_forms(oracle::nested_forests(5, 2, 3)))
    if (nesting_level(f) >= 2) nested.push_back(f);
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, nested.size() - 1);
  std::vector<OmegaBase> obs;
  for (const auto& x : spaces) obs.push_back(omega_base_over(up_sets(x), 3));
  for (int s = 0; s < 200; ++s) {
    const Forest& f = nested[pick(rng)];
    const Forest& g = nested[pick(rng)];
    Forest m = ops.meet(f, g);
    bool le = h_leq(f, g);
    for (const auto& ob : obs) {
      auto a = level_bits(f, ob, 2), b = level_bits(g, ob, 2), c = level_bits(m, ob, 2);
      for (std::size_t t = 0; t < a.size(); ++t) {
        check(!le || !a[t] || b[t], [&] { return "level of " + show(f) + " not inside level of " + show(g); });
        check(c[t] == (a[t] && b[t]),
              [&] { return "level of meet(" + show(f) + ", " + show(g) + ") is not the intersection"; });
      }
    }
  }
}

inline void a9(const Ops&, Checker& check) {
  auto chain = degree_poset(chain_space(2), 2);
  check(chain.size() == 4, [&] { return "2-chain has " + std::to_string(chain.size()) + " degrees"; });
  auto incomparable_pair = [&](const std::vector<std::size_t>& v) {
    return v.size() == 2 && !chain.below[v[0]][v[1]] && !chain.below[v[1]][v[0]];
  };
  check(incomparable_pair(chain.minimal()), [] { return "2-chain minimal degrees are not two incomparable ones"; });
  check(incomparable_pair(chain.maximal()), [] { return "2-chain maximal degrees are not two incomparable ones"; });
  auto anti = degree_poset(antichain_space(2), 2);
  check(anti.size() == 3, [&] { return "2-antichain has " + std::to_string(anti.size()) + " degrees"; });
}

inline void a10(const Ops&, Checker& check) {
  Forest f = parse_term("(0*1)*2");
  check(parse_term("⊥").empty() && parse_term("bot").empty(), [] { return "bottom does not parse to the empty forest"; });
  check(parse_term("0*(1⊔2)") == as_forest(wrap(Label::color(0), join(as_forest(leaf(1)), as_forest(leaf(2))))),
        [] { return "0*(1⊔2) is not wrap(0, 1 ⊔ 2)"; });
  check(f.size() == 1 && !f.trees[0].label.is_color() && f.trees[0].label.forest() == as_forest(t_flat(1)) &&
            f.trees[0].children == as_forest(leaf(2)),
        [] { return "(0*1)*2 has the wrong structure"; });
  check(parse_term("0*1|2") == join(parse_term("0*1"), parse_term("2")), [] { return "* does not bind tighter"; });
  check(parse_term("0*1*0") == parse_term("0*(1*0)"), [] { return "* is not right associative"; });
  check(parse_term("s(0*1)") == as_forest(wrap(Label::nested(as_forest(t_flat(1))), {})),
        [] { return "s(0*1) is not the singleton labeled 0*1"; });
  std::mt19937 rng(1234);
  for (int s = 0; s < 1000; ++s) {
    std::string text = random_term(rng, 3, 4);
    Forest g = parse_term(text, 3);
    check(parse_term(print_term(g)) == normalize(g), [&] { return "print/parse of " + text + " is not the normal form"; });
    check(parse_term(print_term_raw(g)) == g, [&] { return "raw print/parse of " + text + " changes the structure"; });
  }
}

}  // namespace detail

struct Suite {
  std::string id;
  std::string title;
  std::function<void(const Ops&, detail::Checker&)> body;
};

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"A1", "h-preorder against morphism enumeration", detail::a1},
      {"A2", "join and meet are lub and glb; distributivity", detail::a2},
      {"A3", "flat canonical trees and 2-forest classification", detail::a3},
      {"A4", "levels of T_n over up-sets equal D_n images", detail::a4},
      {"A5", "nested canonical trees over small ordinals", detail::a5},
      {"A6", "flatten / unflatten equivalence", detail::a6},
      {"A7", "reduction property and reduced families", detail::a7},
      {"A8", "levels are monotone and meets intersect", detail::a8},
      {"A9", "degree posets of small spaces", detail::a9},
      {"A10", "term parser", detail::a10},
  };
  return all;
}

inline SuiteResult run_suite(const Suite& s, const Ops& ops = {}) {
  SuiteResult r;
  r.id = s.id;
  r.title = s.title;
  detail::Checker check;
  auto start = std::chrono::steady_clock::now();
  try {
    s.body(ops, check);
    r.passed = true;
  } catch (const SuiteFailure& e) {
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.detail = std::string("unexpected error: ") + e.what();
  }
  r.checks = check.count;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::vector<std::string> fast_ids() { return {"A1", "A2", "A3", "A4"}; }

// Runs the named suites (all when ids is empty), calling report after each.
inline std::vector<SuiteResult> run(const std::vector<std::string>& ids, const Ops& ops = {},
                                    const std::function<void(const SuiteResult&)>& report = {}) {
  std::vector<SuiteResult> out;
  for (const auto& s : suites()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), s.id) == ids.end()) continue;
    out.push_back(run_suite(s, ops));
    if (report) report(out.back());
  }
  return out;
}

inline std::string format(const SuiteResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " " << r.id << " " << r.title << " (" << r.checks << " checks, " << std::fixed;
  os.precision(1);
  os << r.seconds << " s)";
  if (!r.passed) os << ": " << r.detail;
  return os.str();
}

}  // namespace hier::acceptance
