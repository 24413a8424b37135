#include <gtest/gtest.h>

#include "hier/canonical.hpp"
#include "hier/oracle.hpp"
#include "hier/term.hpp"

using namespace hier;

namespace {

Forest T(const char* text) { return parse_term(text); }
Ordinal O(const char* text) { return parse_ordinal(text); }
Forest tn(const char* a, Polarity p = Polarity::plain) { return t_nested(O(a), p); }
Forest star(const Forest& f, const Forest& g) { return as_forest(wrap(Label::nested(f), g)); }

// labels at every level are single trees
bool tree_labels_only(const Forest& f) {
  for (const auto& t : f.trees) {
    if (!t.label.is_color() && (t.label.forest().trees.size() != 1 || !tree_labels_only(t.label.forest())))
      return false;
    if (!tree_labels_only(t.children)) return false;
  }
  return true;
}

std::vector<Ordinal> small_ordinals() { return ordinals_up_to_size(9); }

}  // namespace

TEST(TFlat, Examples) {
  EXPECT_EQ(as_forest(t_flat(0)), T("0"));
  EXPECT_EQ(as_forest(t_flat(2)), T("0*1*0"));
  EXPECT_EQ(as_forest(t_flat(2, Polarity::bar)), T("1*0*1"));
  ASSERT_FALSE(oracle::brute_h_leq(as_forest(t_flat(1)), as_forest(t_flat(1, Polarity::bar))));
  ASSERT_FALSE(oracle::brute_h_leq(as_forest(t_flat(1, Polarity::bar)), as_forest(t_flat(1))));
  EXPECT_FALSE(h_leq(t_flat(1), t_flat(1, Polarity::bar)));
  EXPECT_FALSE(h_leq(t_flat(1, Polarity::bar), t_flat(1)));
}

TEST(TFlat, RankIsIndex) {
  for (std::size_t n = 0; n < 12; ++n) {
    EXPECT_EQ(rank(t_flat(n)), n);
    EXPECT_EQ(rank(t_flat(n, Polarity::bar)), n);
  }
}

TEST(TNested, RuleExamples) {
  EXPECT_EQ(tn("w"), T("s(0*1)"));
  EXPECT_EQ(tn("w+1"), as_forest(wrap(Label::color(0), join(tn("w"), tn("w", Polarity::bar)))));
  EXPECT_EQ(tn("w*2"), star(as_forest(t_flat(1)), tn("w", Polarity::bar)));
  EXPECT_EQ(tn("w^2"), as_forest(wrap(Label::nested(as_forest(t_flat(2))), {})));
  EXPECT_EQ(tn("w^w"), as_forest(wrap(Label::nested(tn("w")), {})));
  EXPECT_EQ(tn("w^2+w"), star(as_forest(t_flat(1)), join(tn("w^2"), tn("w^2", Polarity::bar))));
  EXPECT_EQ(tn("w^2+w*2"), star(as_forest(t_flat(1)), tn("w^2+w", Polarity::bar)));
  EXPECT_EQ(tn("5"), as_forest(t_flat(5)));
  EXPECT_EQ(tn("w", Polarity::bar), T("s(1*0)"));
}

TEST(TNested, SuccessorRuleMatchesTheOtherDerivation) {
  // 0*(T_b | bar T_b) against 0*bar T_b for successors b above w
  for (const char* b : {"w+1", "w*2+1", "w^2+2", "w^w+1", "w^2+w+3"}) {
    Forest via_join = as_forest(wrap(Label::color(0), join(tn(b), tn(b, Polarity::bar))));
    Forest via_bar = as_forest(wrap(Label::color(0), tn(b, Polarity::bar)));
    EXPECT_TRUE(h_equiv(via_join, via_bar)) << b;
  }
}

TEST(TNestedProperty, StrictlyIncreasingAndIncomparable) {
  auto ords = small_ordinals();
  ASSERT_GT(ords.size(), 15u);
  for (std::size_t i = 0; i < ords.size(); ++i) {
    Forest ta = t_nested(ords[i]), tb = t_nested(ords[i], Polarity::bar);
    ASSERT_FALSE(h_leq(ta, tb)) << to_string(ords[i]);
    ASSERT_FALSE(h_leq(tb, ta)) << to_string(ords[i]);
    Forest both = join(ta, tb);
    for (std::size_t j = i + 1; j < ords.size(); ++j) {
      Forest up = t_nested(ords[j]);
      ASSERT_TRUE(h_leq(both, up)) << to_string(ords[i]) << " < " << to_string(ords[j]);
      ASSERT_FALSE(h_leq(up, both)) << to_string(ords[i]) << " < " << to_string(ords[j]);
    }
  }
}

TEST(TNestedProperty, MeetOfSuccessorPair) {
  for (const auto& a : small_ordinals()) {
    Ordinal next = succ(a);
    Forest m = meet(t_nested(next), t_nested(next, Polarity::bar));
    ASSERT_TRUE(h_equiv(m, join(t_nested(a), t_nested(a, Polarity::bar)))) << to_string(a);
  }
}

TEST(Classify2Forest, Examples) {
  EXPECT_EQ(classify_2forest(T("0|0")), (CanonicalName{CanonicalName::Kind::T, O("0")}));
  EXPECT_EQ(classify_2forest(T("1*0*1")), (CanonicalName{CanonicalName::Kind::Tbar, O("2")}));
  EXPECT_EQ(classify_2forest(T("0*1|1*0|0")), (CanonicalName{CanonicalName::Kind::TjoinTbar, O("1")}));
  EXPECT_THROW(classify_2forest(Forest::bottom()), std::invalid_argument);
  EXPECT_THROW(classify_2forest(T("0*2")), std::invalid_argument);
}

TEST(Classify2ForestProperty, UniqueVerifiedName) {
  using K = CanonicalName::Kind;
  for (const auto& f : oracle::flat_forests(6, 2)) {
    CanonicalName name = classify_2forest(f);
    ASSERT_TRUE(oracle::pruned_h_leq(f, representative(name)));
    ASSERT_TRUE(oracle::pruned_h_leq(representative(name), f));
    for (K other : {K::T, K::Tbar, K::TjoinTbar}) {
      if (other == name.kind) continue;
      ASSERT_FALSE(h_equiv(representative({other, name.index}), f)) << print_term_raw(f);
    }
  }
}

TEST(Classify2TreeNested, Examples) {
  EXPECT_EQ(classify_2tree_nested(T("s(0*1)"), 8), (CanonicalName{CanonicalName::Kind::T, O("w")}));
  EXPECT_EQ(classify_2tree_nested(T("0"), 1), (CanonicalName{CanonicalName::Kind::T, O("0")}));
  EXPECT_EQ(classify_2tree_nested(tn("w+1", Polarity::bar), 16), (CanonicalName{CanonicalName::Kind::Tbar, O("w+1")}));
  EXPECT_EQ(classify_2tree_nested(tn("w+1"), 3), std::nullopt);
}

TEST(Classify2TreeNestedProperty, RecoversEveryIndexInBound) {
  for (const auto& a : small_ordinals())
    for (Polarity p : {Polarity::plain, Polarity::bar}) {
      auto name = classify_2tree_nested(t_nested(a, p), 9);
      ASSERT_TRUE(name.has_value());
      ASSERT_EQ(name->index, a);
      ASSERT_EQ(name->kind, p == Polarity::plain ? CanonicalName::Kind::T : CanonicalName::Kind::Tbar);
    }
}

TEST(Classify2TreeNestedProperty, EverySmallNestedTreeHasAName) {
  std::size_t checked = 0;
  for (const auto& f : oracle::nested_forests(6, 2, 3)) {
    if (f.trees.size() != 1 || !tree_labels_only(f)) continue;
    ++checked;
    auto name = classify_2tree_nested(f, 12);
    ASSERT_TRUE(name.has_value()) << print_term_raw(f);
    ASSERT_TRUE(h_equiv(representative(*name), f));
  }
  EXPECT_GT(checked, 50u);
}

TEST(Classify2TreeNested, ForestLabelsFallOutsideTheFamily) {
  // s(0|1) lies strictly between every flat 2-tree and T_w
  Forest f = T("s(0|1)");
  EXPECT_TRUE(h_leq(as_forest(t_flat(7)), f));
  EXPECT_TRUE(h_leq(f, tn("w")));
  EXPECT_FALSE(h_leq(tn("w"), f));
  EXPECT_EQ(classify_2tree_nested(f, 12), std::nullopt);
}

TEST(CanonicalSize, MatchesBuiltTrees) {
  for (const auto& a : ordinals_up_to_size(16)) {
    std::map<Ordinal, std::size_t> memo;
    ASSERT_EQ(detail::canonical_size(a, memo), total_size(t_nested(a))) << to_string(a);
    ASSERT_LE(total_size(t_nested(a)), 16u);
  }
}

TEST(Classify2TreeNested, AgreesWithLinearScan) {
  auto ords = ordinals_up_to_size(10);
  for (const auto& f : oracle::nested_forests(5, 2, 3)) {
    if (f.trees.size() != 1) continue;
    std::optional<CanonicalName> scan;
    for (const auto& a : ords) {
      if (h_equiv(t_nested(a), f)) scan = CanonicalName{CanonicalName::Kind::T, a};
      else if (h_equiv(t_nested(a, Polarity::bar), f)) scan = CanonicalName{CanonicalName::Kind::Tbar, a};
      if (scan) break;
    }
    ASSERT_EQ(classify_2tree_nested(f, 10), scan) << print_term_raw(f);
  }
}
