#include <gtest/gtest.h>

#include "hier/oracle.hpp"
#include "hier/term.hpp"

using namespace hier;

TEST(ParseTerm, Examples) {
  EXPECT_TRUE(parse_term("⊥").empty());
  EXPECT_TRUE(parse_term("bot").empty());
  EXPECT_EQ(parse_term("0*(1⊔2)"), as_forest(wrap(Label::color(0), parse_term("1|2"))));
  Forest f = parse_term("(0*1)*2");
  ASSERT_EQ(f.size(), 1u);
  const Tree& t = f.trees[0];
  ASSERT_FALSE(t.label.is_color());
  EXPECT_EQ(t.label.forest(), parse_term("0*1"));
  EXPECT_EQ(t.children, parse_term("2"));
}

TEST(ParseTerm, StarBindsTighterAndAssociatesRight) {
  EXPECT_EQ(parse_term("0*1|2"), join(parse_term("0*1"), parse_term("2")));
  EXPECT_EQ(parse_term("0*1*0"), parse_term("0*(1*0)"));
}

TEST(ParseTerm, ColorStarCoincidesWithWrap) {
  for (const auto& g : oracle::flat_forests(3, 2))
    for (int i = 0; i < 2; ++i) {
      Forest star = parse_term(std::to_string(i) + "*(" + print_term_raw(g) + ")");
      ASSERT_EQ(star, as_forest(wrap(Label::color(i), g)));
    }
}

TEST(ParseTerm, Errors) {
  EXPECT_THROW(parse_term("0*"), TermSyntaxError);
  EXPECT_THROW(parse_term("(0|1"), TermSyntaxError);
  EXPECT_THROW(parse_term("0 1"), TermSyntaxError);
  EXPECT_THROW(parse_term("bot*1"), TermSyntaxError);
  try {
    parse_term("0|1|x");
    FAIL();
  } catch (const TermSyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_term("0*3", 3), TermSyntaxError);
  EXPECT_NO_THROW(parse_term("0*2", 3));
}

TEST(PrintTerm, ParseOfPrintIsNormalForm) {
  std::vector<Forest> corpus = oracle::flat_forests(5, 2, true);
  for (auto& f : oracle::nested_forests(5, 2, 3)) corpus.push_back(f);
  for (const auto& f : corpus) {
    ASSERT_EQ(parse_term(print_term(f)), normalize(f)) << print_term_raw(f);
    ASSERT_EQ(parse_term(print_term_raw(f)), f) << print_term_raw(f);
  }
}
