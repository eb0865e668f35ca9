#include "cosmo/closed_forms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cosmo/graph.hpp"

namespace cosmo {
namespace {

constexpr std::uint64_t kMaxCountArcs = std::uint64_t{1} << 29;

void check_p(const Rational& p) {
  if (p < 0 || p > 1) throw std::domain_error("probability outside [0, 1]: " + p.get_str());
}

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability outside [0, 1]: " + std::to_string(p));
}

void check_n(std::uint64_t n) {
  if (n < 1) throw std::domain_error("node count must be positive");
}

Rational to_rational(const Integer& z) { return Rational(z); }

Rational slots(std::uint64_t n) { return to_rational(binomial(n, 2)); }

double slots_f(std::uint64_t n) { return static_cast<double>(n) * static_cast<double>(n - 1) / 2.0; }

double choose2_f(double x) { return x * (x - 1) / 2.0; }

double choose3_f(double x) { return x * (x - 1) * (x - 2) / 6.0; }

// q^k for k possibly large; pow is exact at the endpoints.
double qpow(double q, double k) { return std::pow(q, k); }

}  // namespace

std::uint64_t cosmo_edge_count(std::uint64_t m, std::uint64_t leaves) {
  if (leaves > 2 * m) {
    throw std::domain_error("cosmo_edge_count: " + std::to_string(leaves) + " leaves exceed 2m = " +
                            std::to_string(2 * m));
  }
  if (m > kMaxCountArcs) throw std::overflow_error("cosmo_edge_count: arc count too large");
  return 9 * (m * (m - (m > 0)) / 2) + m + leaves;
}

std::uint64_t tri_edge_count(std::uint64_t m, std::uint64_t n_tilde) {
  if (n_tilde > 2 * m) {
    throw std::domain_error("tri_edge_count: " + std::to_string(n_tilde) +
                            " non-isolated nodes exceed 2m = " + std::to_string(2 * m));
  }
  if (m > kMaxCountArcs) throw std::overflow_error("tri_edge_count: arc count too large");
  return 16 * (m * (m - (m > 0)) / 2) + n_tilde * (n_tilde - (n_tilde > 0)) / 2 + 4 * n_tilde * m;
}

Rational mean_arcs(std::uint64_t n, const Rational& p) {
  check_n(n);
  check_p(p);
  return slots(n) * p;
}

Rational mean_leaves(std::uint64_t n, const Rational& p) {
  check_n(n);
  check_p(p);
  if (n < 2) return Rational(0);
  return Rational(n * (n - 1)) * p * power(1 - p, n - 2);
}

Rational mean_cosmo(std::uint64_t n, const Rational& p) {
  check_n(n);
  check_p(p);
  const Integer m = binomial(n, 2);
  return 9 * to_rational(binomial(m, 2)) * p * p + to_rational(m) * p + mean_leaves(n, p);
}

Rational mean_tri(std::uint64_t n, const Rational& p) {
  check_n(n);
  check_p(p);
  if (n < 2) return Rational(0);
  const Integer m = binomial(n, 2);
  const Rational q = 1 - p;
  const Rational q_n1 = power(q, n - 1);
  Rational out = 16 * to_rational(binomial(m, 2)) * p * p;
  out += to_rational(m) * (1 - 2 * q_n1 + power(q, 2 * n - 3));
  out += 4 * Rational(n * (n - 1)) * p;
  out += 4 * Rational(n) * to_rational(binomial(n - 1, 2)) * p * (1 - q_n1);
  return out;
}

Rational var_arcs(std::uint64_t n, const Rational& p) {
  check_n(n);
  check_p(p);
  return slots(n) * p * (1 - p);
}

Rational var_pairs_of_arcs(std::uint64_t n, const Rational& p) {
  check_n(n);
  check_p(p);
  const Integer m = binomial(n, 2);
  const Rational p2 = p * p;
  return to_rational(binomial(m, 2)) * p2 * (1 - p2) +
         kSharedArcPairCoefficient * to_rational(binomial(m, 3)) * p2 * p * (1 - p);
}

Rational cov_pairs_of_arcs_with_arcs(std::uint64_t n, const Rational& p) {
  check_n(n);
  check_p(p);
  return 2 * to_rational(binomial(binomial(n, 2), 2)) * p * p * (1 - p);
}

Rational var_leaves(std::uint64_t n, const Rational& p) {
  check_n(n);
  check_p(p);
  if (n < 3) {
    // The pairwise-covariance exponent 2n-5 is negative here; enumerate.
    Rational first(0);
    Rational second(0);
    for (const Graph& g : enumerate_graphs(static_cast<Node>(n))) {
      const Rational w = graph_weight(g, p);
      const Rational leaves(static_cast<unsigned long>(compute_stats(g).leaves));
      first += w * leaves;
      second += w * leaves * leaves;
    }
    return second - first * first;
  }
  const Rational q = 1 - p;
  const Rational single = Rational(n - 1) * p * power(q, n - 2);
  const Rational diag = Rational(n) * single * (1 - single);
  const Rational shape = 1 - Rational(n - 1) * p;
  const Rational off = Rational(n * (n - 1)) * p * power(q, 2 * n - 5) * shape * shape;
  return diag + off;
}

Rational var_core_exact(std::uint64_t n, const Rational& p) {
  return 81 * var_pairs_of_arcs(n, p) + var_arcs(n, p) + 18 * cov_pairs_of_arcs_with_arcs(n, p);
}

RationalInterval variance_interval_cosmo(std::uint64_t n, const Rational& p) {
  const Rational v0 = var_core_exact(n, p);
  const Rational vl = var_leaves(n, p);
  const RationalInterval root = sqrt_bounds(v0 * vl, 96);
  return {v0 - 2 * root.upper, v0 + 2 * root.upper + vl};
}

MomentReport cosmo_moments(std::uint64_t n, const Rational& p) {
  MomentReport r;
  r.mean = mean_cosmo(n, p);
  r.variance_core = var_core_exact(n, p);
  r.variance_leaf = var_leaves(n, p);
  r.variance_interval = variance_interval_cosmo(n, p);
  return r;
}

double mean_arcs(std::uint64_t n, double p) {
  check_n(n);
  check_p(p);
  return slots_f(n) * p;
}

double mean_leaves(std::uint64_t n, double p) {
  check_n(n);
  check_p(p);
  if (n < 2) return 0.0;
  const double nd = static_cast<double>(n);
  return nd * (nd - 1) * p * qpow(1 - p, nd - 2);
}

double mean_cosmo(std::uint64_t n, double p) {
  const double m = slots_f(n);
  return 9 * choose2_f(m) * p * p + m * p + mean_leaves(n, p);
}

double mean_tri(std::uint64_t n, double p) {
  check_n(n);
  check_p(p);
  if (n < 2) return 0.0;
  const double nd = static_cast<double>(n);
  const double m = slots_f(n);
  const double q = 1 - p;
  const double q_n1 = qpow(q, nd - 1);
  return 16 * choose2_f(m) * p * p + m * (1 - 2 * q_n1 + qpow(q, 2 * nd - 3)) + 4 * nd * (nd - 1) * p +
         4 * nd * choose2_f(nd - 1) * p * (1 - q_n1);
}

double var_pairs_of_arcs(std::uint64_t n, double p) {
  check_n(n);
  check_p(p);
  const double m = slots_f(n);
  return choose2_f(m) * p * p * (1 - p * p) + kSharedArcPairCoefficient * choose3_f(m) * p * p * p * (1 - p);
}

double var_leaves(std::uint64_t n, double p) {
  check_n(n);
  check_p(p);
  if (n < 3) {
    // Same enumeration as the exact path: L is 0 or 2 on two nodes.
    return n == 2 ? 4 * p * (1 - p) : 0.0;
  }
  const double nd = static_cast<double>(n);
  const double q = 1 - p;
  const double single = (nd - 1) * p * qpow(q, nd - 2);
  const double shape = 1 - (nd - 1) * p;
  return nd * single * (1 - single) + nd * (nd - 1) * p * qpow(q, 2 * nd - 5) * shape * shape;
}

double var_core_exact(std::uint64_t n, double p) {
  const double m = slots_f(n);
  return 81 * var_pairs_of_arcs(n, p) + m * p * (1 - p) + 18 * 2 * choose2_f(m) * p * p * (1 - p);
}

FloatInterval variance_interval_cosmo(std::uint64_t n, double p) {
  const double v0 = var_core_exact(n, p);
  const double vl = var_leaves(n, p);
  const double root = std::sqrt(v0 * vl);
  return {v0 - 2 * root, v0 + 2 * root + vl};
}

double tri_var_lower_reference(std::uint64_t n, double p) {
  check_n(n);
  check_p(p);
  const double nd = static_cast<double>(n);
  const double q = 1 - p;
  const double q_n1 = qpow(q, nd - 1);
  return std::pow(nd, 6) * p * p * p * q + std::pow(nd, 5) * p * p * q_n1 * (1 - q_n1) +
         std::pow(nd, 3) * p * q * (1 - q_n1);
}

double clt_rate(std::uint64_t n, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("clt_rate: need 0 < p < 1");
  check_n(n);
  return 1.0 / (static_cast<double>(n) * std::sqrt(p * (1 - p)));
}

}  // namespace cosmo
