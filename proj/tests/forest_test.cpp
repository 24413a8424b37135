#include <gtest/gtest.h>

#include <map>
#include <random>

#include "hier/forest.hpp"
#include "hier/oracle.hpp"
#include "hier/term.hpp"

using namespace hier;

namespace {

Forest T(const char* text) { return parse_term(text); }

}  // namespace

TEST(HLeq, BottomIsBelowEverything) {
  EXPECT_TRUE(h_leq(Forest::bottom(), T("0*1|2")));
  EXPECT_TRUE(h_leq(Forest::bottom(), Forest::bottom()));
  EXPECT_FALSE(h_leq(T("0"), Forest::bottom()));
}

TEST(HLeq, DistinctSingletonsAreIncomparable) {
  EXPECT_FALSE(h_leq(T("0"), T("1")));
  EXPECT_FALSE(oracle::brute_h_leq(T("0"), T("1")));
}

TEST(HLeq, ChainVersusJoin) {
  // expected values come from exhaustive map enumeration
  ASSERT_FALSE(oracle::brute_h_leq(T("0*1"), T("0|1")));
  ASSERT_TRUE(oracle::brute_h_leq(T("0|1"), T("0*1")));
  EXPECT_FALSE(h_leq(T("0*1"), T("0|1")));
  EXPECT_TRUE(h_leq(T("0|1"), T("0*1")));
}

TEST(HEquiv, Examples) {
  Forest f = T("0*(1|2*0)");
  EXPECT_TRUE(h_equiv(f, f));
  EXPECT_TRUE(h_equiv(T("0|0"), T("0")));
  ASSERT_TRUE(oracle::brute_h_leq(T("0*0*1"), T("0*1")));
  ASSERT_TRUE(oracle::brute_h_leq(T("0*1"), T("0*0*1")));
  EXPECT_TRUE(h_equiv(T("0*0*1"), T("0*1")));
}

TEST(Join, IdentityAndUpperBound) {
  Forest f = T("0*1|1");
  Forest g = T("2*0");
  EXPECT_EQ(join(f, Forest::bottom()), f);
  EXPECT_TRUE(h_leq(f, join(f, g)));
  EXPECT_TRUE(h_leq(g, join(f, g)));
  EXPECT_EQ(join_many({f, g, Forest::bottom()}).trees.size(), 3u);
}

TEST(Wrap, Examples) {
  EXPECT_EQ(as_forest(wrap(Label::color(0), Forest::bottom())), T("0"));
  Forest f = T("1*0|2");
  EXPECT_TRUE(h_leq(f, as_forest(wrap(Label::color(1), f))));
  EXPECT_EQ(as_forest(wrap(Label::color(0), T("1|2"))), T("0*(1|2)"));
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(T("0")), 0u);
  EXPECT_EQ(rank(T("0*1")), 1u);
  EXPECT_EQ(rank(T("0*1*0")), 2u);
  EXPECT_EQ(rank(T("0|1*0*1|1")), 2u);
  EXPECT_THROW(rank(Forest::bottom()), std::invalid_argument);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(T("0|0")), T("0"));
  EXPECT_EQ(normalize(T("0*0*1")), T("0*1"));
  ASSERT_FALSE(oracle::brute_h_leq(T("0*1"), T("1*0")));
  ASSERT_FALSE(oracle::brute_h_leq(T("1*0"), T("0*1")));
  EXPECT_EQ(normalize(T("0*1|1*0")), T("0*1|1*0"));
  EXPECT_EQ(normalize(T("1*0|0*1")), T("0*1|1*0"));
}

TEST(Meet, Examples) {
  Forest t = T("0*(1|2*1)");
  EXPECT_TRUE(h_equiv(meet(t, t), t));
  EXPECT_TRUE(meet(T("0"), T("1")).empty());
  EXPECT_TRUE(h_equiv(meet(T("0*1"), T("1*0")), T("0|1")));
  EXPECT_TRUE(meet(T("0*1"), Forest::bottom()).empty());
}

TEST(Meet, NoCommonNonemptyLowerBoundOfDistinctColors) {
  // every nonempty forest of at most 4 nodes fails to sit below 0 or below 1
  for (const auto& h : oracle::flat_forests(4, 2))
    EXPECT_FALSE(oracle::brute_h_leq(h, T("0")) && oracle::brute_h_leq(h, T("1")));
}

TEST(Components, JoinIrreducibility) {
  auto comps = tree_components(T("0|1"));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(as_forest(comps[0]), T("0"));
  EXPECT_EQ(as_forest(comps[1]), T("1"));
  EXPECT_TRUE(is_join_irreducible(T("0*1")));
  EXPECT_FALSE(is_join_irreducible(T("0|1")));
  EXPECT_TRUE(is_join_irreducible(T("0|0*1")));
}

TEST(CheckColors, RejectsOutOfRange) {
  EXPECT_NO_THROW(check_colors(T("0*1"), 2));
  EXPECT_THROW(check_colors(T("0*2"), 2), std::invalid_argument);
  EXPECT_THROW(check_colors(T("0"), 1), std::invalid_argument);
}

TEST(Label, SingletonNestedCollapsesToColor) {
  Label l = Label::nested(T("1"));
  ASSERT_TRUE(l.is_color());
  EXPECT_EQ(l.color(), 1);
  EXPECT_THROW(Label::nested(Forest::bottom()), std::invalid_argument);
}

TEST(HLeqProperty, AgreesWithFullEnumeration) {
  auto corpus = oracle::flat_forests(4, 2, true);
  for (const auto& f : corpus)
    for (const auto& g : corpus) ASSERT_EQ(h_leq(f, g), oracle::brute_h_leq(f, g)) << print_term_raw(f) << " vs " << print_term_raw(g);
}

TEST(HLeqProperty, ReflexiveAndTransitive) {
  auto corpus = oracle::flat_forests(4, 3);
  std::vector<Forest> classes;
  for (const auto& f : corpus) classes.push_back(normalize(f));
  std::sort(classes.begin(), classes.end(),
            [](const Forest& a, const Forest& b) { return structure_key(a) < structure_key(b); });
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  std::size_t n = classes.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) le[i][j] = h_leq(classes[i], classes[j]);
  for (std::size_t i = 0; i < n; ++i) {
    ASSERT_TRUE(le[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      // distinct normal forms are never equivalent
      if (i != j) {
        ASSERT_FALSE(le[i][j] && le[j][i]);
      }
      for (std::size_t l = 0; l < n; ++l) {
        ASSERT_TRUE(!(le[i][j] && le[j][l]) || le[i][l]);
      }
    }
  }
}

TEST(NormalizeProperty, IdempotentAndCanonical) {
  auto corpus = oracle::flat_forests(5, 2, true);
  std::map<std::string, Forest> by_normal;
  for (const auto& f : corpus) {
    Forest n = normalize(f);
    ASSERT_EQ(normalize(n), n);
    ASSERT_TRUE(h_equiv(n, f));
    by_normal.emplace(structure_key(n), f);
  }
  // representatives of distinct normal forms are pairwise inequivalent
  std::vector<Forest> reps;
  for (auto& [k, f] : by_normal) reps.push_back(f);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) ASSERT_FALSE(h_equiv(reps[i], reps[j]));
}

TEST(MeetProperty, GreatestLowerBoundOnSmallCorpus) {
  auto corpus = oracle::flat_forests(3, 2);
  auto candidates = oracle::flat_forests(4, 2);
  for (const auto& f : corpus)
    for (const auto& g : corpus) {
      Forest m = meet(f, g);
      ASSERT_TRUE(oracle::brute_h_leq(m, f));
      ASSERT_TRUE(oracle::brute_h_leq(m, g));
      for (const auto& h : candidates) {
        ASSERT_TRUE(!(oracle::brute_h_leq(h, f) && oracle::brute_h_leq(h, g)) || oracle::brute_h_leq(h, m));
      }
    }
}

TEST(MeetProperty, EveryForestIsAMeetOfTrees) {
  // F is the meet of the trees i(F), i < k
  for (const auto& f : oracle::flat_forests(4, 3)) {
    Forest m = as_forest(wrap(Label::color(0), f));
    for (int i = 1; i < 3; ++i) m = meet(m, as_forest(wrap(Label::color(i), f)));
    ASSERT_TRUE(h_equiv(m, f)) << print_term_raw(f);
  }
}

TEST(HLeqProperty, NestedLabelsAgreeWithEnumeration) {
  auto corpus = oracle::nested_forests(4, 2, 2);
  ASSERT_GT(corpus.size(), 50u);
  for (const auto& f : corpus)
    for (const auto& g : corpus) ASSERT_EQ(h_leq(f, g), oracle::brute_h_leq(f, g)) << print_term_raw(f) << " vs " << print_term_raw(g);
}

TEST(HLeqProperty, RandomForestsAgreeWithPrunedSearch) {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Forest f = oracle::random_flat_forest(rng, 7, 3);
    Forest g = oracle::random_flat_forest(rng, 7, 3);
    ASSERT_EQ(h_leq(f, g), oracle::pruned_h_leq(f, g));
  }
}
