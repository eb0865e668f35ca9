#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "cosmo/closed_forms.hpp"
#include "support.hpp"

namespace cosmo {
namespace {

using testing::choose2;
using testing::enumerated_covariance;
using testing::enumerated_moments;

// Brute-force statistics, computed from the arc list without the library's stats helper.
Rational arcs_of(const Graph& g) { return Rational(g.arc_count()); }
Rational pairs_of(const Graph& g) { return choose2(g.arc_count()); }
Rational leaves_of(const Graph& g) { return Rational(testing::naive_leaves(g)); }
Rational cosmo_of(const Graph& g) { return 9 * pairs_of(g) + arcs_of(g) + leaves_of(g); }
Rational core_of(const Graph& g) { return 9 * pairs_of(g) + arcs_of(g); }
Rational tri_of(const Graph& g) {
  const std::uint64_t nt = testing::naive_non_isolated(g);
  return 16 * pairs_of(g) + choose2(nt) + Rational(4 * nt * g.arc_count());
}

const Rational kHalf(1, 2);

TEST(CosmoEdgeCount, Examples) {
  EXPECT_EQ(cosmo_edge_count(1, 2), 3u);
  EXPECT_EQ(cosmo_edge_count(3, 0), 30u);
  EXPECT_EQ(cosmo_edge_count(3, 3), 33u);
  EXPECT_EQ(cosmo_edge_count(0, 0), 0u);
  EXPECT_THROW(cosmo_edge_count(1, 3), std::domain_error);
}

TEST(TriEdgeCount, Examples) {
  EXPECT_EQ(tri_edge_count(1, 2), 9u);
  EXPECT_EQ(tri_edge_count(2, 3), 43u);
  EXPECT_EQ(tri_edge_count(3, 3), 87u);
  EXPECT_THROW(tri_edge_count(1, 3), std::domain_error);
}

TEST(TriEdgeCount, LargeArguments) {
  const std::uint64_t m = 5000000;
  EXPECT_EQ(tri_edge_count(m, 100000), 16 * (m * (m - 1) / 2) + 100000ull * 99999 / 2 + 4ull * 100000 * m);
  EXPECT_THROW(cosmo_edge_count(std::uint64_t{1} << 40, 0), std::overflow_error);
}

TEST(MeanCosmo, Examples) {
  const Rational p(2, 7);
  EXPECT_EQ(mean_cosmo(2, p), 3 * p);
  EXPECT_EQ(mean_cosmo(3, kHalf), Rational(39, 4));
  EXPECT_EQ(mean_cosmo(9, Rational(0)), Rational(0));
  EXPECT_THROW(mean_cosmo(3, Rational(3, 2)), std::domain_error);
}

TEST(MeanTri, Examples) {
  const Rational p(3, 11);
  EXPECT_EQ(mean_tri(2, p), 9 * p);
  EXPECT_EQ(mean_tri(7, Rational(0)), Rational(0));
  EXPECT_EQ(mean_tri(3, kHalf), enumerated_moments(3, kHalf, tri_of).mean);
}

TEST(Means, MatchEnumeration) {
  for (Node n = 1; n <= 5; ++n) {
    for (const Rational& p : {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(3, 4), Rational(1)}) {
      EXPECT_EQ(mean_arcs(n, p), enumerated_moments(n, p, arcs_of).mean);
      EXPECT_EQ(mean_leaves(n, p), enumerated_moments(n, p, leaves_of).mean);
      EXPECT_EQ(mean_cosmo(n, p), enumerated_moments(n, p, cosmo_of).mean) << n << " " << p;
      EXPECT_EQ(mean_tri(n, p), enumerated_moments(n, p, tri_of).mean) << n << " " << p;
    }
  }
}

TEST(VarPairsOfArcs, Examples) {
  const Rational p(1, 3);
  EXPECT_EQ(var_pairs_of_arcs(2, p), 0);
  EXPECT_EQ(var_pairs_of_arcs(3, kHalf), Rational(15, 16));
  EXPECT_EQ(var_pairs_of_arcs(6, Rational(0)), 0);
}

TEST(VarPairsOfArcs, SharedArcCoefficientIsSix) {
  // At n = 3 the terms are 3 p^2 (1 - p^2) + c p^3 (1 - p); 15/16 forces c = 6.
  const Rational p = kHalf;
  const Rational enumerated = enumerated_moments(3, p, pairs_of).variance;
  const Rational c = (enumerated - 3 * p * p * (1 - p * p)) / (p * p * p * (1 - p));
  EXPECT_EQ(c, Rational(kSharedArcPairCoefficient));
}

TEST(VarLeaves, Examples) {
  EXPECT_EQ(var_leaves(3, kHalf), Rational(3, 4));
  EXPECT_EQ(var_leaves(2, kHalf), Rational(1));
  EXPECT_EQ(var_leaves(5, Rational(0)), 0);
  EXPECT_EQ(var_leaves(1, kHalf), 0);
}

TEST(VarianceComponents, MatchEnumeration) {
  for (Node n = 2; n <= 5; ++n) {
    for (const Rational& p : {Rational(1, 4), Rational(1, 2), Rational(2, 3)}) {
      EXPECT_EQ(var_arcs(n, p), enumerated_moments(n, p, arcs_of).variance);
      EXPECT_EQ(var_pairs_of_arcs(n, p), enumerated_moments(n, p, pairs_of).variance) << n << " " << p;
      EXPECT_EQ(cov_pairs_of_arcs_with_arcs(n, p), enumerated_covariance(n, p, pairs_of, arcs_of));
      EXPECT_EQ(var_leaves(n, p), enumerated_moments(n, p, leaves_of).variance) << n << " " << p;
      EXPECT_EQ(var_core_exact(n, p), enumerated_moments(n, p, core_of).variance) << n << " " << p;
    }
  }
}

TEST(VarCoreExact, TwoNodes) {
  // Only E varies: Var = p(1-p).
  EXPECT_EQ(var_core_exact(2, kHalf), Rational(1, 4));
  EXPECT_EQ(var_core_exact(4, Rational(0)), 0);
}

TEST(VarianceIntervalCosmo, ContainsEnumeratedVariance) {
  for (Node n = 2; n <= 5; ++n) {
    for (const Rational& p : {Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      const RationalInterval iv = variance_interval_cosmo(n, p);
      const Rational exact = enumerated_moments(n, p, cosmo_of).variance;
      EXPECT_TRUE(iv.contains(exact)) << n << " " << p;
      EXPECT_LE(iv.lower, iv.upper);
    }
  }
  const RationalInterval zero = variance_interval_cosmo(4, Rational(0));
  EXPECT_EQ(zero.lower, 0);
  EXPECT_EQ(zero.upper, 0);
}

TEST(VarianceIntervalCosmo, FloatAgreesWithExact) {
  const RationalInterval exact = variance_interval_cosmo(60, Rational(1, 20));
  const FloatInterval approx = variance_interval_cosmo(60, 0.05);
  EXPECT_NEAR(approx.lower / to_double(exact.lower), 1.0, 1e-9);
  EXPECT_NEAR(approx.upper / to_double(exact.upper), 1.0, 1e-9);
}

TEST(CosmoMoments, Bundle) {
  const MomentReport r = cosmo_moments(4, kHalf);
  EXPECT_EQ(r.mean, mean_cosmo(4, kHalf));
  EXPECT_EQ(r.variance_core, var_core_exact(4, kHalf));
  EXPECT_EQ(r.variance_leaf, var_leaves(4, kHalf));
  EXPECT_TRUE(r.variance_interval.contains(enumerated_moments(4, kHalf, cosmo_of).variance));
}

TEST(FloatMoments, AgreeWithExact) {
  for (std::uint64_t n : {3u, 10u, 57u}) {
    const Rational p(3, 40);
    const double pd = 3.0 / 40;
    EXPECT_NEAR(mean_cosmo(n, pd), to_double(mean_cosmo(n, p)), 1e-10 * to_double(mean_cosmo(n, p)));
    EXPECT_NEAR(mean_tri(n, pd), to_double(mean_tri(n, p)), 1e-10 * to_double(mean_tri(n, p)));
    EXPECT_NEAR(mean_leaves(n, pd), to_double(mean_leaves(n, p)), 1e-10 * to_double(mean_leaves(n, p)));
    EXPECT_NEAR(var_leaves(n, pd), to_double(var_leaves(n, p)), 1e-9 * to_double(var_leaves(n, p)));
    EXPECT_NEAR(var_core_exact(n, pd), to_double(var_core_exact(n, p)), 1e-10 * to_double(var_core_exact(n, p)));
    EXPECT_NEAR(var_pairs_of_arcs(n, pd), to_double(var_pairs_of_arcs(n, p)),
                1e-10 * to_double(var_pairs_of_arcs(n, p)));
  }
}

TEST(TriVarLowerReference, Behaviour) {
  EXPECT_NEAR(tri_var_lower_reference(50, 1e-12), 0.0, 1e-6);
  const double v = tri_var_lower_reference(100, 0.5);
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_GT(v, 0.0);
  const std::uint64_t n = 2000;
  const double p = 0.05;
  const double q = 1 - p;
  const double lead = std::pow(n, 6.0) * p * p * p * q;
  EXPECT_GT(lead / tri_var_lower_reference(n, p), 0.99);
}

TEST(CltRate, Examples) {
  EXPECT_DOUBLE_EQ(clt_rate(100, 0.5), 1.0 / 50);
  EXPECT_DOUBLE_EQ(clt_rate(64, 0.2), clt_rate(64, 0.8));
  EXPECT_DOUBLE_EQ(clt_rate(256, 0.1), clt_rate(128, 0.1) / 2);
  EXPECT_THROW(clt_rate(10, 0.0), std::domain_error);
  EXPECT_THROW(clt_rate(10, 1.0), std::domain_error);
}

TEST(LeadingOrder, MeanRatios) {
  auto cosmo_err = [](std::uint64_t n) {
    const double p = 1 / std::sqrt(static_cast<double>(n));
    return std::abs(mean_cosmo(n, p) / (std::pow(n, 4.0) * p * p) / (9.0 / 8) - 1);
  };
  auto tri_err = [](std::uint64_t n) {
    const double p = 1 / std::sqrt(static_cast<double>(n));
    return std::abs(mean_tri(n, p) / (std::pow(n, 4.0) * p * p) / 2 - 1);
  };
  EXPECT_LE(cosmo_err(1000), 0.02);
  EXPECT_LE(cosmo_err(10000), 0.02);
  EXPECT_LE(tri_err(10000), 0.02);
  // The 4 n~ m term is a relative 1/sqrt(n) correction, about 3% at n = 1000.
  EXPECT_LT(tri_err(10000), tri_err(1000));
  EXPECT_NEAR(tri_err(1000), 0.0298, 0.001);
}

}  // namespace
}  // namespace cosmo
