#include <gtest/gtest.h>

#include "hier/oracle.hpp"
#include "hier/oracle_space.hpp"
#include "hier/wadge.hpp"

using namespace hier;

TEST(MonotoneMaps, Examples) {
  EXPECT_EQ(monotone_maps(chain_space(2), chain_space(2)).size(), 3u);
  EXPECT_EQ(monotone_maps(chain_space(3), chain_space(1)).size(), 1u);
  EXPECT_EQ(monotone_maps(antichain_space(2), antichain_space(2)).size(), 4u);
  EXPECT_THROW(monotone_maps(antichain_space(12), antichain_space(12)), SizeGuardError);
}

TEST(MonotoneMaps, AgreeWithFilteredFunctions) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& x : oracle::all_spaces(n))
      for (const auto& y : oracle::all_spaces(3)) {
        std::size_t count = 0;
        for (const auto& f : oracle::all_functions(x.n, y.n)) count += is_monotone_map(x, y, f);
        ASSERT_EQ(monotone_maps(x, y).size(), count);
      }
}

TEST(WadgeLeq, Examples) {
  auto x = chain_space(2);
  KPartition bottom1{{1, 0}}, top1{{0, 1}};
  EXPECT_TRUE(wadge_leq(top1, top1, x));
  EXPECT_FALSE(wadge_leq(bottom1, top1, x));
  EXPECT_FALSE(wadge_leq(top1, bottom1, x));
  for (int i = 0; i < 2; ++i) {
    KPartition constant{{i, i}};
    for (const auto& b : all_partitions(2, 2))
      EXPECT_EQ(wadge_leq(constant, b, x), b.part(i) != 0);
  }
}

TEST(WadgeLeq, AgreesWithMapEnumeration) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& x : oracle::all_spaces(n)) {
      auto maps = monotone_maps(x, x);
      for (const auto& a : all_partitions(n, 3))
        for (const auto& b : all_partitions(n, 3)) {
          bool brute = false;
          for (const auto& f : maps) {
            bool ok = true;
            for (std::size_t p = 0; p < n; ++p) ok = ok && a.labels[p] == b.labels[f[p]];
            brute = brute || ok;
          }
          ASSERT_EQ(wadge_leq(a, b, x), brute);
        }
    }
}

TEST(DegreePoset, Examples) {
  auto one = degree_poset(chain_space(1), 2);
  EXPECT_EQ(one.size(), 2u);
  EXPECT_TRUE(one.hasse.empty());

  auto chain = degree_poset(chain_space(2), 2);
  ASSERT_EQ(chain.size(), 4u);
  auto mins = chain.minimal(), maxs = chain.maximal();
  ASSERT_EQ(mins.size(), 2u);
  ASSERT_EQ(maxs.size(), 2u);
  EXPECT_FALSE(chain.below[mins[0]][mins[1]] || chain.below[mins[1]][mins[0]]);
  EXPECT_FALSE(chain.below[maxs[0]][maxs[1]] || chain.below[maxs[1]][maxs[0]]);

  EXPECT_EQ(degree_poset(antichain_space(2), 2).size(), 3u);
}

TEST(DegreePosetProperty, ClassesAndOrderAreWellDefined) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& x : oracle::all_spaces(n)) {
      if (n == 4 && !x.leq(0, 1)) continue;  // keep the 4-point sweep short
      auto dp = degree_poset(x, n <= 3 ? 3 : 2);
      std::size_t m = dp.partitions.size();
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          bool r = wadge_leq(dp.partitions[i], dp.partitions[j], x);
          ASSERT_EQ(r, bool(dp.below[dp.degree_of[i]][dp.degree_of[j]]));
        }
      for (std::size_t a = 0; a < dp.size(); ++a)
        for (std::size_t b = 0; b < dp.size(); ++b)
          if (a != b) {
            ASSERT_FALSE(dp.below[a][b] && dp.below[b][a]);
          }
    }
}

TEST(DegreePosetProperty, InvariantUnderRelabeling) {
  // reversing the point numbering of a chain is an order isomorphism onto
  // the dual order relabeled; compare degree counts and Hasse sizes
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& x : oracle::all_spaces(n)) {
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = n - 1 - i;
      FiniteSpace y{n, Relation(n, std::vector<bool>(n))};
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) y.le[perm[a]][perm[b]] = x.le[a][b];
      auto dx = degree_poset(x, 3), dy = degree_poset(y, 3);
      ASSERT_EQ(dx.size(), dy.size());
      ASSERT_EQ(dx.hasse.size(), dy.hasse.size());
      // partition A of x corresponds to A o perm^-1 of y
      for (std::size_t i = 0; i < dx.partitions.size(); ++i)
        for (std::size_t j = 0; j < dx.partitions.size(); ++j) {
          auto move = [&](const KPartition& a) {
            KPartition b{std::vector<int>(n)};
            for (std::size_t p = 0; p < n; ++p) b.labels[perm[p]] = a.labels[p];
            return b;
          };
          ASSERT_EQ(wadge_leq(dx.partitions[i], dx.partitions[j], x),
                    wadge_leq(move(dx.partitions[i]), move(dx.partitions[j]), y));
        }
    }
}

TEST(WadgeLeq, CrossSpace) {
  KPartition a{{0, 1}};
  KPartition b{{0, 0, 1}};
  EXPECT_TRUE(wadge_leq(a, chain_space(2), b, chain_space(3)));
  EXPECT_FALSE(wadge_leq(b, chain_space(3), KPartition{{1, 0}}, chain_space(2)));
  EXPECT_THROW(wadge_leq(a, chain_space(3), b, chain_space(3)), std::invalid_argument);
}

TEST(DegreeDot, HasOneNodePerDegree) {
  auto dot = degrees_to_dot(degree_poset(chain_space(2), 2));
  EXPECT_NE(dot.find("d3 ["), std::string::npos);
  EXPECT_EQ(dot.find("d4 ["), std::string::npos);
}
