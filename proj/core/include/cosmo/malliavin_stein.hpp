#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cosmo/graph.hpp"
#include "cosmo/rational.hpp"

namespace cosmo {

// A pure, total real-valued function of a graph.
struct GraphFunctional {
  std::string label;
  std::function<double(const Graph&)> evaluate;

  double operator()(const Graph& g) const { return evaluate(g); }
};

GraphFunctional arc_count_functional();
GraphFunctional leaf_count_functional();
GraphFunctional non_isolated_functional();
GraphFunctional cosmo_edge_functional();
GraphFunctional tri_edge_functional();
GraphFunctional constant_functional(double value);
GraphFunctional product_functional(GraphFunctional a, GraphFunctional b);

// D_e F = sqrt(p q) (F(g + e) - F(g - e)); does not depend on whether e is in g.
double first_gradient(const GraphFunctional& f, const Graph& g, ArcId e, double p);

// D_f D_e F = sqrt(p_e q_e p_f q_f) (F++ - F+- - F-+ + F--); zero when e == f.
double second_gradient(const GraphFunctional& f, const Graph& g, ArcId e, ArcId other, double p_e, double p_other);
inline double second_gradient(const GraphFunctional& f, const Graph& g, ArcId e, ArcId other, double p) {
  return second_gradient(f, g, e, other, p, p);
}

// D_e(AB) - [(D_e A) B_e + A_e (D_e B) + (D_e A)(D_e B) / sqrt(pq)], where
// A_e, B_e are evaluated with e absent. Zero up to rounding.
double product_rule_residual(const GraphFunctional& a, const GraphFunctional& b, const Graph& g, ArcId e,
                             double p);

// F evaluated once on every graph of n nodes, addressed by arc bitmask.
class FunctionalTable {
 public:
  FunctionalTable(const GraphFunctional& f, Node n, unsigned slot_cap = kDefaultEnumerationCap);

  Node node_count() const { return n_; }
  unsigned slots() const { return slots_; }
  std::uint64_t size() const { return values_.size(); }
  double at(std::uint64_t mask) const { return values_[mask]; }

  // F(g + e) - F(g - e).
  double difference(std::uint64_t mask, unsigned e) const {
    const std::uint64_t bit = std::uint64_t{1} << e;
    return values_[mask | bit] - values_[mask & ~bit];
  }

  // F++ - F+- - F-+ + F-- over the joint states of arcs e and f.
  double second_difference(std::uint64_t mask, unsigned e, unsigned f) const {
    const std::uint64_t be = std::uint64_t{1} << e;
    const std::uint64_t bf = std::uint64_t{1} << f;
    const std::uint64_t base = mask & ~(be | bf);
    return values_[base | be | bf] - values_[base | be] - values_[base | bf] + values_[base];
  }

 private:
  Node n_;
  unsigned slots_;
  std::vector<double> values_;
};

// Largest |F++ - F+- - F-+ + F--| over all graphs and arc pairs e != f,
// split by whether e and f share an endpoint.
struct SecondDifferenceExtremes {
  double disjoint = 0;
  double intersecting = 0;
};
SecondDifferenceExtremes second_difference_extremes(const FunctionalTable& table);

struct Atom {
  double value;
  Rational probability;
};

// Finite law with atoms sorted by value and positive probabilities summing to 1.
struct AtomicDistribution {
  std::vector<Atom> atoms;

  Rational mean() const;
  Rational variance() const;
};

Rational exact_expectation(const GraphFunctional& f, Node n, const Rational& p,
                           unsigned slot_cap = kDefaultEnumerationCap);
AtomicDistribution exact_distribution(const GraphFunctional& f, Node n, const Rational& p,
                                      unsigned slot_cap = kDefaultEnumerationCap);

// E[(D_e F)^4], exact for rational-valued F.
Rational first_gradient_fourth_moment(const GraphFunctional& f, Node n, const Rational& p, ArcId e);

struct BTerms {
  double b1 = 0;
  double b2 = 0;
  double b3 = 0;
  double b4 = 0;
  double b5 = 0;
};

struct BTermOptions {
  // Six nodes means 15 arc slots and about 10^8 summands; off unless asked for.
  bool allow_six_nodes = false;
};

// The five moment sums of the second-order Poincare bound for the
// standardization (F - E F) / sd(F) under the enumerated law. Sums run over
// all ordered index tuples, diagonal ones included.
BTerms b_terms(const GraphFunctional& f, Node n, std::span<const Rational> arc_probabilities,
               BTermOptions options = {});
BTerms b_terms(const GraphFunctional& f, Node n, const Rational& p, BTermOptions options = {});

// (sqrt15/2) sqrt B1 + (sqrt3/2) sqrt B2 + 2 sqrt B3 + 2 sqrt6 sqrt B4 + 2 sqrt3 sqrt B5.
double kolmogorov_bound(const BTerms& b);

// sup_x |P(X <= x) - Phi((x - mean)/sd)| for a finitely supported X.
double exact_kolmogorov_distance(const AtomicDistribution& d, double mean, double sd);

}  // namespace cosmo
