#include <gtest/gtest.h>

#include "hier/oracle.hpp"
#include "hier/oracle_space.hpp"
#include "hier/space.hpp"

using namespace hier;

namespace {

PointSet S(std::initializer_list<std::size_t> xs) {
  PointSet s = 0;
  for (auto x : xs) s |= PointSet{1} << x;
  return s;
}

// bottoms 0, 1 below tops 2, 3
FiniteSpace diamond() { return space_from_pairs(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

std::size_t count_up_sets(const FiniteSpace& x) {
  std::size_t n = 0;
  for (PointSet a = 0; a < (PointSet{1} << x.n); ++a) {
    bool up = true;
    for (std::size_t p = 0; p < x.n; ++p)
      for (std::size_t q = 0; q < x.n; ++q)
        if (contains(a, p) && x.leq(p, q) && !contains(a, q)) up = false;
    n += up;
  }
  return n;
}

}  // namespace

TEST(CloseBase, Examples) {
  EXPECT_EQ(close_base(3, {}).sets, std::vector<PointSet>{0});
  Base chain = up_sets(chain_space(2));
  EXPECT_EQ(close_base(2, chain.sets).sets, chain.sets);
  EXPECT_EQ(close_base(2, {S({0}), S({1})}).sets, (std::vector<PointSet>{0, S({0}), S({1}), S({0, 1})}));
  EXPECT_THROW(close_base(2, {S({3})}), std::invalid_argument);
}

TEST(UpSets, Examples) {
  EXPECT_EQ(up_sets(chain_space(2)).sets, (std::vector<PointSet>{0, S({1}), S({0, 1})}));
  EXPECT_EQ(up_sets(antichain_space(2)).sets, powerset(2).sets);
  EXPECT_EQ(up_sets(diamond()).sets.size(), 7u);
}

TEST(UpSets, CountMatchesDirectCheck) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& x : oracle::all_spaces(n)) {
      Base b = up_sets(x);
      ASSERT_EQ(b.sets.size(), count_up_sets(x));
      ASSERT_NO_THROW(validate(b));
    }
}

TEST(Space, ClosureAndErrors) {
  auto c = chain_space(3);
  EXPECT_TRUE(c.leq(0, 2));
  EXPECT_THROW(space_from_pairs(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(space_from_pairs(2, {{0, 2}}), std::invalid_argument);
  FiniteSpace bad{2, {{true, false}, {true, false}}};
  EXPECT_THROW(validate(bad), std::invalid_argument);
}

TEST(Base, ValidationCatchesMissingClosure) {
  EXPECT_THROW(validate(Base{2, {0, S({0}), S({1})}}), std::invalid_argument);
  EXPECT_THROW(validate(Base{2, {S({0})}}), std::invalid_argument);
  OmegaBase ok{{up_sets(chain_space(2)), powerset(2)}};
  EXPECT_NO_THROW(validate(ok));
  OmegaBase bad{{up_sets(chain_space(2)), up_sets(chain_space(2))}};
  EXPECT_THROW(validate(bad), std::invalid_argument);
}

TEST(DifferenceKernel, Examples) {
  EXPECT_EQ(difference_kernel({S({0, 2})}), S({0, 2}));
  EXPECT_EQ(difference_kernel({S({0}), S({0, 1})}), S({1}));
  PointSet a0 = S({0}), a1 = S({1, 2}), a2 = S({0, 2, 3, 4});
  EXPECT_EQ(difference_kernel({a0, a1, a2}), a0 | (a2 & ~(a0 | a1)));
  EXPECT_EQ(difference_kernel({}), 0u);
}

TEST(ReductionProperty, Examples) {
  EXPECT_TRUE(has_reduction_property(powerset(3)));
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_TRUE(has_reduction_property(up_sets(chain_space(n))));
  EXPECT_FALSE(has_reduction_property(up_sets(diamond())));
}

TEST(ReductionProperty, PairwiseFormGivesTriples) {
  // whenever pairs reduce, every triple reduces too (checked directly)
  std::vector<Base> bases;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& x : oracle::all_spaces(n)) bases.push_back(up_sets(x));
  bases.push_back(powerset(3));
  bases.push_back(close_base(3, {S({0, 1}), S({1, 2})}));
  for (const auto& l : bases) {
    if (!has_reduction_property(l)) continue;
    for (PointSet a : l.sets)
      for (PointSet b : l.sets)
        for (PointSet c : l.sets) {
          bool found = false;
          for (PointSet a2 : l.sets)
            for (PointSet b2 : l.sets)
              for (PointSet c2 : l.sets)
                if (!found && subset_of(a2, a) && subset_of(b2, b) && subset_of(c2, c) && !(a2 & b2) && !(a2 & c2) &&
                    !(b2 & c2) && (a2 | b2 | c2) == (a | b | c))
                  found = true;
          ASSERT_TRUE(found);
          auto r = reduce_sequence(l, {a, b, c});
          ASSERT_TRUE(r.has_value());
        }
  }
}

TEST(Partitions, Enumeration) {
  auto all = all_partitions(3, 2);
  EXPECT_EQ(all.size(), 8u);
  EXPECT_EQ(all[1].labels, (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(all[1].part(1), S({0}));
  EXPECT_THROW(check_partition(KPartition{{0, 2}}, 2, 2), std::invalid_argument);
}

TEST(SizeGuard, Limits) {
  EXPECT_NO_THROW(check_size(5, 4));
  EXPECT_THROW(check_size(6, 2), SizeGuardError);
  EXPECT_THROW(check_size(3, 5), SizeGuardError);
  EXPECT_NO_THROW(check_size(6, 5, true));
}
