#include "cosmo/simplex.hpp"

#include <gtest/gtest.h>

namespace cosmo {
namespace {

std::vector<Rational> row(std::initializer_list<int> values) {
  std::vector<Rational> r;
  for (int v : values) r.emplace_back(v);
  return r;
}

TEST(Simplex, EmptySystemIsFeasible) {
  LinearSystem sys;
  sys.variables = 3;
  auto x = find_feasible_point(sys);
  ASSERT_TRUE(x);
  EXPECT_EQ(x->size(), 3U);
}

TEST(Simplex, FindsPointOfBoundedBox) {
  LinearSystem sys;
  sys.variables = 2;
  sys.add_inequality(row({1, 0}), Rational(1, 2));
  sys.add_inequality(row({-1, 0}), -2);
  sys.add_inequality(row({0, 1}), -3);
  sys.add_inequality(row({0, -1}), -1);
  sys.add_equality(row({1, 1}), Rational(3, 2));
  auto x = find_feasible_point(sys);
  ASSERT_TRUE(x);
  EXPECT_TRUE(sys.satisfied_by(*x));
}

TEST(Simplex, NegativeCoordinatesAreReachable) {
  LinearSystem sys;
  sys.variables = 1;
  sys.add_inequality(row({-1}), 5);  // x <= -5
  auto x = find_feasible_point(sys);
  ASSERT_TRUE(x);
  EXPECT_LE((*x)[0], -5);
}

TEST(Simplex, DetectsInfeasibility) {
  LinearSystem sys;
  sys.variables = 2;
  sys.add_inequality(row({1, 1}), 1);
  sys.add_inequality(row({-1, -1}), 1);
  EXPECT_FALSE(find_feasible_point(sys));

  LinearSystem eq;
  eq.variables = 2;
  eq.add_equality(row({1, 2}), 1);
  eq.add_equality(row({2, 4}), 3);
  EXPECT_FALSE(find_feasible_point(eq));
}

TEST(Simplex, DegenerateSystemTerminates) {
  // Many redundant constraints through the origin; Bland's rule keeps this finite.
  LinearSystem sys;
  sys.variables = 3;
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) sys.add_inequality(row({a, b, 1}), 0);
  }
  sys.add_inequality(row({0, 0, 1}), 1);
  SimplexStats stats;
  auto x = find_feasible_point(sys, &stats);
  ASSERT_TRUE(x);
  EXPECT_TRUE(sys.satisfied_by(*x));
}

TEST(Simplex, WidthMismatchRejected) {
  LinearSystem sys;
  sys.variables = 2;
  EXPECT_THROW(sys.add_inequality(row({1}), 0), std::invalid_argument);
}

TEST(ExactRank, CountsIndependentRows) {
  EXPECT_EQ(exact_rank({}), 0U);
  EXPECT_EQ(exact_rank({row({1, 2, 3}), row({2, 4, 6})}), 1U);
  EXPECT_EQ(exact_rank({row({1, 0, 0}), row({0, 1, 0}), row({1, 1, 0})}), 2U);
  EXPECT_EQ(exact_rank({row({0, 0}), row({0, 0})}), 0U);
  EXPECT_EQ(exact_rank({row({0, 1}), row({1, 0})}), 2U);
}

}  // namespace
}  // namespace cosmo
