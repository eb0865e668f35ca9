#pragma once

#include <cstdint>

#include "cosmo/rational.hpp"

namespace cosmo {

// Polytope edge count from arc and leaf counts: 9 C(m,2) + m + leaves.
std::uint64_t cosmo_edge_count(std::uint64_t m, std::uint64_t leaves);

// Triangulation edge count: 16 C(m,2) + C(n~,2) + 4 n~ m, with n~ the number
// of non-isolated nodes.
std::uint64_t tri_edge_count(std::uint64_t m, std::uint64_t n_tilde);

// Coefficient c in Var(C(E,2)) = C(M,2) p^2 (1-p^2) + c C(M,3) p^3 (1-p).
// Each triple of arcs yields three unordered pairs of arc-pairs sharing one
// arc, each counted twice in the ordered covariance sum.
inline constexpr int kSharedArcPairCoefficient = 6;

// Exact moments for G(n, p). Every function requires 0 <= p <= 1.
Rational mean_arcs(std::uint64_t n, const Rational& p);
Rational mean_leaves(std::uint64_t n, const Rational& p);
Rational mean_cosmo(std::uint64_t n, const Rational& p);
Rational mean_tri(std::uint64_t n, const Rational& p);
Rational var_arcs(std::uint64_t n, const Rational& p);
Rational var_pairs_of_arcs(std::uint64_t n, const Rational& p);
Rational cov_pairs_of_arcs_with_arcs(std::uint64_t n, const Rational& p);
// For n < 3 the value comes from enumerating the graphs directly.
Rational var_leaves(std::uint64_t n, const Rational& p);
// Var(9 C(E,2) + E).
Rational var_core_exact(std::uint64_t n, const Rational& p);
// Brackets Var(9 C(E,2) + E + L) using |Cov| <= sqrt(V0 V_L); roots are
// rounded outward.
RationalInterval variance_interval_cosmo(std::uint64_t n, const Rational& p);

struct MomentReport {
  Rational mean;
  Rational variance_core;
  Rational variance_leaf;
  RationalInterval variance_interval;
};

MomentReport cosmo_moments(std::uint64_t n, const Rational& p);

// Floating-point evaluations of the same formulas for simulation-scale n,
// where the exact powers of (1-p) become unwieldy.
double mean_arcs(std::uint64_t n, double p);
double mean_leaves(std::uint64_t n, double p);
double mean_cosmo(std::uint64_t n, double p);
double mean_tri(std::uint64_t n, double p);
double var_pairs_of_arcs(std::uint64_t n, double p);
double var_leaves(std::uint64_t n, double p);
double var_core_exact(std::uint64_t n, double p);

struct FloatInterval {
  double lower = 0;
  double upper = 0;
};
FloatInterval variance_interval_cosmo(std::uint64_t n, double p);

// n^6 p^3 q + n^5 p^2 q^(n-1) (1 - q^(n-1)) + n^3 p q (1 - q^(n-1)); a scale
// reference for the triangulation variance, not a bound.
double tri_var_lower_reference(std::uint64_t n, double p);

// 1 / (n sqrt(p (1-p))).
double clt_rate(std::uint64_t n, double p);

}  // namespace cosmo
