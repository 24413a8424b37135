#include <gtest/gtest.h>

#include <random>

#include "hier/ordinal.hpp"

using namespace hier;

namespace {

Ordinal O(const char* s) { return parse_ordinal(s); }

// Random notations of bounded depth, terms and coefficients.
Ordinal random_ordinal(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> nterms(0, 3);
  std::uniform_int_distribution<std::uint64_t> coef(1, 3);
  std::vector<Ordinal> exps;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) exps.push_back(depth == 0 ? Ordinal{} : random_ordinal(rng, depth - 1));
  std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return a > b; });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<OrdinalTerm> terms;
  for (auto& e : exps) terms.push_back(OrdinalTerm{e, coef(rng)});
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace

TEST(CmpOrd, Examples) {
  EXPECT_EQ(cmp_ord(Ordinal{}, Ordinal{}), std::strong_ordering::equal);
  EXPECT_EQ(cmp_ord(O("w"), O("w^w")), std::strong_ordering::less);
  EXPECT_EQ(cmp_ord(O("w*2+3"), O("w*3")), std::strong_ordering::less);
  EXPECT_LT(O("w^2"), O("w^2+1"));
  EXPECT_LT(O("1000"), O("w"));
}

TEST(Parity, Examples) {
  EXPECT_EQ(parity(Ordinal{}), Parity::even);
  EXPECT_EQ(parity(O("3")), Parity::odd);
  EXPECT_EQ(parity(O("w+4")), Parity::even);
  EXPECT_EQ(parity(O("w^w*5")), Parity::even);
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ(add(O("3"), O("w")), O("w"));
  EXPECT_EQ(omega_pow(Ordinal{}), O("1"));
  EXPECT_EQ(add(O("w*2"), O("w+1")), O("w*3+1"));
  EXPECT_EQ(succ(O("w^2")), O("w^2+1"));
  EXPECT_EQ(add(O("w^2+w*5+7"), O("w^2")), O("w^2*2"));
}

TEST(Text, RoundTrip) {
  for (const char* s : {"0", "7", "w", "w*2+3", "w^2*3+w+1", "w^w", "w^(w+1)*2+w^w+5", "w^w^2", "w^(w*2)"})
    EXPECT_EQ(to_string(O(s)), s);
  EXPECT_EQ(O("1+w"), O("w"));
  EXPECT_EQ(O("w^0*4"), O("4"));
}

TEST(Text, Errors) {
  EXPECT_THROW(O(""), OrdinalSyntaxError);
  EXPECT_THROW(O("w^"), OrdinalSyntaxError);
  EXPECT_THROW(O("w*"), OrdinalSyntaxError);
  EXPECT_THROW(O("x"), OrdinalSyntaxError);
  EXPECT_THROW(O("w^(w"), OrdinalSyntaxError);
  try {
    O("w+w+?");
  } catch (const OrdinalSyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(FromTerms, RejectsNonDecreasingExponents) {
  EXPECT_THROW(Ordinal::from_terms({{Ordinal::finite(1), 1}, {Ordinal::finite(2), 1}}), std::invalid_argument);
  EXPECT_EQ(Ordinal::from_terms({{Ordinal::finite(1), 0}}), Ordinal{});
}

TEST(Depth, Examples) {
  EXPECT_EQ(O("5").depth(), 0);
  EXPECT_EQ(O("w*3+2").depth(), 1);
  EXPECT_EQ(O("w^w+1").depth(), 2);
}

TEST(OrdinalProperty, TotalOrderOnGeneratedCorpus) {
  std::mt19937 rng(11);
  std::vector<Ordinal> corpus;
  for (int i = 0; i < 500; ++i) corpus.push_back(random_ordinal(rng, 2));
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      auto ij = cmp_ord(corpus[i], corpus[j]);
      auto ji = cmp_ord(corpus[j], corpus[i]);
      ASSERT_EQ(ij == 0, ji == 0);
      ASSERT_EQ(ij < 0, ji > 0);
      ASSERT_EQ(ij == 0, to_string(corpus[i]) == to_string(corpus[j]));
    }
  std::sort(corpus.begin(), corpus.end());
  for (std::size_t i = 0; i + 2 < corpus.size(); i += 7)
    for (std::size_t j = i; j < corpus.size(); j += 13) ASSERT_LE(corpus[i], corpus[j]);
}

TEST(OrdinalProperty, ArithmeticLaws) {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    Ordinal a = random_ordinal(rng, 2), b = random_ordinal(rng, 2), c = random_ordinal(rng, 2);
    ASSERT_EQ(add(add(a, b), c), add(a, add(b, c)));
    ASSERT_GT(succ(a), a);
    ASSERT_EQ(cmp_ord(omega_pow(a), omega_pow(b)), cmp_ord(a, b));
    ASSERT_NE(parity(succ(a)), parity(a));
    ASSERT_LE(a, add(a, b));
    ASSERT_LE(b, add(a, b));
    ASSERT_EQ(parse_ordinal(to_string(a)), a);
  }
}
