#include "mtrank/sharpness.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace mtrank {
namespace {

void expect_equality_family(const ExampleReport& r, unsigned n) {
  EXPECT_EQ(r.abelian_dim, pow2(n - 1)) << n;
  EXPECT_EQ(r.mt_rank, n + 1) << n;
  EXPECT_TRUE(r.bound_value_equalled) << n;
  EXPECT_TRUE(r.all_checks_passed()) << n;
  const auto b = commutative_rank_bound(r.abelian_dim);
  EXPECT_EQ(b.min_rank, r.mt_rank);
  EXPECT_TRUE(b.equality);
}

TEST(CmExample, Values) {
  auto r = cm_example(2);
  EXPECT_EQ(r.abelian_dim, 2);
  EXPECT_EQ(r.mt_rank, 3u);
  r = cm_example(5);
  EXPECT_EQ(r.abelian_dim, 16);
  EXPECT_EQ(r.mt_rank, 6u);
  ASSERT_NE(r.note("torus_rank_cap"), nullptr);
  EXPECT_TRUE(r.note("torus_rank_cap")->passed);
  for (unsigned n = 2; n <= 20; ++n) expect_equality_family(cm_example(n), n);
  EXPECT_THROW(cm_example(1), std::invalid_argument);
}

TEST(SpinExample, Values) {
  auto r = spin_example(5);
  EXPECT_EQ(r.abelian_dim, 16);
  EXPECT_EQ(r.mt_rank, 6u);
  EXPECT_EQ(r.note("spin_orbit_size")->value, "32 = 32");
  EXPECT_EQ(r.note("signature")->value, "(2,9)");
  r = spin_example(6);
  EXPECT_EQ(r.abelian_dim, 32);
  EXPECT_EQ(r.mt_rank, 7u);
  EXPECT_TRUE(r.bound_value_equalled);
  EXPECT_THROW(spin_example(4), std::invalid_argument);
  EXPECT_THROW(spin_example(3), std::invalid_argument);
  EXPECT_THROW(spin_example(0), std::invalid_argument);
}

TEST(SpinExample, AliasAtN1) {
  const auto r = spin_example(1);
  expect_equality_family(r, 1);
  EXPECT_NE(r.note("alias"), nullptr);
  EXPECT_EQ(r.note("spin_orbit_size")->value, "2 = 2");
}

TEST(SpinExample, CharacterCountAttained) {
  for (unsigned n = 1; n <= 20; ++n) {
    if (n % 4 != 1 && n % 4 != 2) continue;
    const auto r = spin_example(n);
    expect_equality_family(r, n);
    EXPECT_TRUE(r.note("char_count_attained")->passed) << n;
  }
}

TEST(Sl2ProductExample, Values) {
  auto r = sl2_product_example(3);
  EXPECT_EQ(r.abelian_dim, 4);
  EXPECT_EQ(r.mt_rank, 4u);
  ASSERT_NE(r.note("mumford_anchor"), nullptr);
  EXPECT_TRUE(r.note("mumford_anchor")->passed);
  r = sl2_product_example(5);
  EXPECT_EQ(r.abelian_dim, 16);
  EXPECT_EQ(r.mt_rank, 6u);
  EXPECT_EQ(r.shape.name(), "A1xA1xA1xA1xA1xT1");
  for (unsigned n = 1; n <= 19; n += 2) expect_equality_family(sl2_product_example(n), n);
  EXPECT_THROW(sl2_product_example(2), std::invalid_argument);
}

TEST(LargeMultiplicityExample, Values) {
  auto r = large_multiplicity_example(3);
  EXPECT_EQ(r.abelian_dim, 9);
  EXPECT_EQ(r.mt_rank, 3u);
  r = large_multiplicity_example(5);
  EXPECT_EQ(r.abelian_dim, 50);
  const double delta = std::log2(50.0) - 5 - 0.5 * std::log2(5.0);
  EXPECT_NEAR(large_multiplicity_deviation(5, r.abelian_dim), delta, 1e-12);
  EXPECT_NEAR(delta, -0.517, 1e-3);
  EXPECT_THROW(large_multiplicity_example(4), std::invalid_argument);
  EXPECT_THROW(large_multiplicity_example(1), std::invalid_argument);
}

TEST(LargeMultiplicityExample, LatticeAndGeneralBound) {
  for (unsigned n = 3; n <= 99; n += 2) {
    const auto r = large_multiplicity_example(n);
    EXPECT_EQ(r.abelian_dim, BigNat(n) * binomial(n, (n - 1) / 2));
    EXPECT_TRUE(r.note("u_gl_model")->passed) << n;
    EXPECT_TRUE(r.note("multiplicity_divides_u")->passed) << n;
    EXPECT_TRUE(r.note("general_bound_satisfied")->passed) << n;
    EXPECT_LE(general_rank_bound(r.abelian_dim).min_rank, n);
  }
}

// With rank n and u = n the check reduces to 2^(n-2) >= C(n, r), which fails
// for n = 3, 5, 7.
TEST(LargeMultiplicityExample, TripleCheckAtRankN) {
  for (unsigned n = 3; n <= 99; n += 2) {
    const auto r = large_multiplicity_example(n);
    EXPECT_EQ(r.note("triple_noncommutative_consistent")->passed, n >= 9) << n;
  }
}

TEST(LargeMultiplicityExample, DeviationBand) {
  double lo = 1, hi = -1;
  for (unsigned n = 11; n <= 199; n += 2) {
    const double d = large_multiplicity_deviation(n, BigNat(n) * binomial(n, (n - 1) / 2));
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  EXPECT_GE(lo, -0.45);
  EXPECT_LE(hi, -0.30);
  const double limit = -0.5 * std::log2(M_PI / 2);
  const double far = large_multiplicity_deviation(1001, BigNat(1001) * binomial(1001, 500));
  EXPECT_NEAR(far, limit, 0.005);
}

}  // namespace
}  // namespace mtrank
