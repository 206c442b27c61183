#include "mtrank/bounds.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace mtrank {
namespace {

TEST(CharCountBound, Values) {
  EXPECT_EQ(char_count_bound(1), 1);
  EXPECT_EQ(char_count_bound(5), 16);
  for (unsigned n = 1; n <= 30; ++n) EXPECT_EQ(char_count_bound(n + 1), pow2(n));
  EXPECT_THROW(char_count_bound(0), std::invalid_argument);
}

TEST(DimBound, Values) {
  EXPECT_EQ(dim_bound(1, 1), 1);
  for (unsigned n = 1; n <= 20; ++n) EXPECT_EQ(dim_bound(n + 1, 1), pow2(n));
  EXPECT_EQ(dim_bound(4, 3), 24);
  EXPECT_THROW(dim_bound(0, 1), std::invalid_argument);
  EXPECT_THROW(dim_bound(1, 0), std::invalid_argument);
}

// n * 2^(n-1) >= 2n C(n, (n-1)/2) reduces to 2^(n-2) >= C(n, (n-1)/2), which
// first holds at n = 9 (128 >= 126).
TEST(DimBound, LargeMultiplicityComparison) {
  for (unsigned n = 3; n <= 99; n += 2) {
    const BigNat rhs = 2 * BigNat(n) * binomial(n, (n - 1) / 2);
    EXPECT_EQ(dim_bound(n, n) >= rhs, n >= 9) << n;
  }
}

TEST(CountDistinctCharacters, Examples) {
  EXPECT_EQ(count_distinct_characters({}), 0);
  const SimpleType b3(Family::B, 3);
  const auto spin = weyl_orbit(b3, highest_weight(minuscule_catalog(b3).front()));
  EXPECT_EQ(count_distinct_characters(spin), 8);
  EXPECT_LE(count_distinct_characters(spin), char_count_bound(4));
  const SimpleType a4(Family::A, 4);
  const auto wedge2 = weyl_orbit(a4, fundamental_weights(a4)[1]);
  EXPECT_EQ(count_distinct_characters(wedge2), 10);
  EXPECT_LE(count_distinct_characters(wedge2), char_count_bound(5));
  auto doubled = spin;
  doubled.insert(doubled.end(), spin.begin(), spin.end());
  EXPECT_EQ(count_distinct_characters(doubled), 8);
}

TEST(CountDistinctCharacters, CatalogWithinBound) {
  for (const auto& t : admissible_types(10))
    for (const auto& rep : minuscule_catalog(t)) {
      const BigNat count = count_distinct_characters(weyl_orbit(t, highest_weight(rep)));
      EXPECT_LE(count, char_count_bound(t.rank() + 1)) << t.name();
    }
}

TEST(CommutativeRankBound, Examples) {
  auto b = commutative_rank_bound(1);
  EXPECT_EQ(b.min_rank, 2u);
  EXPECT_TRUE(b.equality);
  for (unsigned n = 1; n <= 40; ++n) {
    b = commutative_rank_bound(pow2(n - 1));
    EXPECT_EQ(b.min_rank, n + 1);
    EXPECT_TRUE(b.equality);
  }
  b = commutative_rank_bound(5);
  EXPECT_EQ(b.min_rank, 5u);
  EXPECT_FALSE(b.equality);
  EXPECT_EQ(b.witness_lhs, 32);
  EXPECT_EQ(b.witness_rhs, 20);
  EXPECT_THROW(commutative_rank_bound(0), std::invalid_argument);
}

TEST(CommutativeRankBound, UniqueThreshold) {
  std::mt19937_64 rng(7);
  std::vector<BigNat> gs;
  for (unsigned g = 1; g <= 5000; ++g) gs.emplace_back(g);
  for (int i = 0; i < 200; ++i) gs.push_back(BigNat(rng()) * BigNat(rng()) + 1);
  for (const auto& g : gs) {
    const auto b = commutative_rank_bound(g);
    ASSERT_GE(b.min_rank, 2u);
    // 2^(n-3) < g <= 2^(n-2), written as 2^(n-1) < 4g <= 2^n.
    ASSERT_LT(pow2(b.min_rank - 1), 4 * g);
    ASSERT_LE(4 * g, pow2(b.min_rank));
    ASSERT_EQ(b.equality, is_power_of_two(g));
    ASSERT_GE(b.witness_lhs, b.witness_rhs);
  }
}

TEST(TripleChecks, Examples) {
  EXPECT_TRUE(triple_commutative_check(1, 1));
  for (unsigned n = 1; n <= 20; ++n) {
    EXPECT_TRUE(triple_commutative_check(n + 1, pow2(n)));
    EXPECT_FALSE(triple_commutative_check(n + 1, pow2(n) + 1));
  }
  EXPECT_FALSE(triple_commutative_check(3, 5));
  EXPECT_TRUE(triple_noncommutative_check(1, 1, 1));
  EXPECT_FALSE(triple_noncommutative_check(4, 1, 16));
  EXPECT_THROW(triple_noncommutative_check(1, 0, 1), std::invalid_argument);
  EXPECT_THROW(triple_commutative_check(0, 1), std::invalid_argument);
}

TEST(TripleChecks, UnitMultiplicityDegenerates) {
  for (unsigned rank = 1; rank <= 12; ++rank)
    for (unsigned dim = 1; dim <= 3000; dim += 7)
      ASSERT_EQ(triple_noncommutative_check(rank, 1, dim), triple_commutative_check(rank, dim));
}

TEST(GeneralRankBound, Examples) {
  auto b = general_rank_bound(1);
  EXPECT_EQ(b.min_rank, 2u);
  EXPECT_EQ(b.witness_lhs, 12);
  EXPECT_EQ(b.witness_rhs, 4);
  for (unsigned n = 1; n <= 30; ++n) EXPECT_LE(general_rank_bound(pow2(n - 1)).min_rank, n + 1);
  EXPECT_THROW(general_rank_bound(0), std::invalid_argument);
  EXPECT_THROW(general_rank_bound(pow2(600)), std::overflow_error);
}

TEST(GeneralRankBound, ThousandAgainstOracle) {
  unsigned expected = 2;
  while ((std::uint64_t{1} << expected) * testing::oracle_g1(expected) < 4000) ++expected;
  EXPECT_EQ(expected, 8u);
  EXPECT_EQ(general_rank_bound(1000).min_rank, expected);
}

TEST(GeneralRankBound, NeverStrongerThanCommutativeAndMonotone) {
  std::vector<BigNat> gs;
  for (unsigned k = 0; k <= 20; ++k) {
    const BigNat p = pow2(k);
    for (const BigNat& g : std::vector<BigNat>{p - 1, p, p + 1})
      if (g >= 1 && g <= 1000000) gs.push_back(g);
  }
  // Breakpoints of the general bound: 2^n g1(n) / 4.
  const LandauTable table(30);
  for (unsigned n = 2; n <= 30; ++n) {
    const BigNat edge = pow2(n) * table.g1(n) / 4;
    for (const BigNat& g : std::vector<BigNat>{edge, edge + 1})
      if (g >= 1 && g <= 1000000) gs.push_back(g);
  }
  std::sort(gs.begin(), gs.end());
  gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
  unsigned last_comm = 0, last_gen = 0;
  for (const auto& g : gs) {
    const auto c = commutative_rank_bound(g);
    const auto n = general_rank_bound(g);
    ASSERT_LE(n.min_rank, c.min_rank) << g;
    ASSERT_GE(c.min_rank, last_comm) << g;
    ASSERT_GE(n.min_rank, last_gen) << g;
    ASSERT_GE(n.witness_lhs, n.witness_rhs);
    if (n.min_rank > 2) ASSERT_LT(pow2(n.min_rank - 1) * table.g1(n.min_rank - 1), 4 * g);
    last_comm = c.min_rank;
    last_gen = n.min_rank;
  }
}

TEST(ProductRankBound, SumsDimensions) {
  EXPECT_EQ(product_rank_bound({1}).min_rank, general_rank_bound(1).min_rank);
  EXPECT_EQ(product_rank_bound({2, 3}).input_dimension, 5);
  EXPECT_EQ(product_rank_bound({2, 3}).min_rank, general_rank_bound(5).min_rank);
  EXPECT_EQ(product_rank_bound({4, 4, 4}).min_rank, general_rank_bound(12).min_rank);
  EXPECT_THROW(product_rank_bound({}), std::invalid_argument);
  EXPECT_THROW(product_rank_bound({3, 0}), std::invalid_argument);
}

TEST(HodgeSplit, Values) {
  auto h = hodge_split(7, 7);
  EXPECT_EQ(h.values.first, Rational(1, 2));
  EXPECT_EQ(h.values.second, Rational(-1, 2));
  h = hodge_split(1, 0);
  EXPECT_EQ(h.r, 0);
  EXPECT_EQ(h.values.first, 1);
  EXPECT_EQ(h.values.second, 0);
  h = hodge_split(3, 1);
  EXPECT_EQ(h.r, Rational(1, 4));
  EXPECT_EQ(h.values.first, Rational(3, 4));
  EXPECT_EQ(h.values.second, Rational(-1, 4));
  EXPECT_THROW(hodge_split(0, 0), std::invalid_argument);
  for (unsigned g0 = 0; g0 < 12; ++g0)
    for (unsigned g1 = 0; g1 < 12; ++g1) {
      if (g0 + g1 == 0) continue;
      const auto s = hodge_split(g0, g1);
      EXPECT_EQ(s.values.first - s.values.second, 1);  // <w, mu> in {0, 1} shifted by r
      EXPECT_EQ(s.values.first * g1 + s.values.second * g0, 0);
    }
}

TEST(DivisionFieldExponent, Values) {
  auto e = division_field_exponent(1, 1);
  EXPECT_DOUBLE_EQ(e.value, 2.0);
  ASSERT_TRUE(e.exact);
  EXPECT_EQ(*e.exact, 2);
  e = division_field_exponent(4, 1);
  EXPECT_DOUBLE_EQ(e.value, 4.0);
  e = division_field_exponent(3, 2);
  EXPECT_NEAR(e.value, 2 * (std::log2(3.0) + 2), 1e-12);
  EXPECT_NEAR(e.value, 7.1699, 1e-4);
  EXPECT_FALSE(e.exact);
  EXPECT_THROW(division_field_exponent(0, 1), std::invalid_argument);
}

}  // namespace
}  // namespace mtrank
