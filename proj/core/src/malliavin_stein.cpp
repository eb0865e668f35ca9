#include "cosmo/malliavin_stein.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "cosmo/closed_forms.hpp"
#include "cosmo/normal.hpp"

namespace cosmo {
namespace {

void check_open_p(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("discrete gradients need 0 < p < 1, got " + std::to_string(p));
  }
}

Rational exact_value(double v) {
  if (!std::isfinite(v)) throw std::domain_error("functional returned a non-finite value");
  return Rational(v);
}

std::vector<Rational> mask_weights(std::span<const Rational> arc_p, std::uint64_t count) {
  std::vector<Rational> w(count);
  const unsigned slots = static_cast<unsigned>(arc_p.size());
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Rational prod(1);
    for (unsigned e = 0; e < slots; ++e) {
      prod *= ((mask >> e) & 1U) ? arc_p[e] : Rational(1 - arc_p[e]);
    }
    w[mask] = prod;
  }
  return w;
}

}  // namespace

GraphFunctional arc_count_functional() {
  return {"arcs", [](const Graph& g) { return static_cast<double>(g.arc_count()); }};
}

GraphFunctional leaf_count_functional() {
  return {"leaves", [](const Graph& g) { return static_cast<double>(compute_stats(g).leaves); }};
}

GraphFunctional non_isolated_functional() {
  return {"non_isolated", [](const Graph& g) { return static_cast<double>(compute_stats(g).non_isolated); }};
}

GraphFunctional cosmo_edge_functional() {
  return {"cosmo_edges", [](const Graph& g) {
            const GraphStats s = compute_stats(g);
            return static_cast<double>(cosmo_edge_count(s.m, s.leaves));
          }};
}

GraphFunctional tri_edge_functional() {
  return {"tri_edges", [](const Graph& g) {
            const GraphStats s = compute_stats(g);
            return static_cast<double>(tri_edge_count(s.m, s.non_isolated));
          }};
}

GraphFunctional constant_functional(double value) {
  return {"constant", [value](const Graph&) { return value; }};
}

GraphFunctional product_functional(GraphFunctional a, GraphFunctional b) {
  std::string label = a.label + "*" + b.label;
  return {std::move(label), [a = std::move(a), b = std::move(b)](const Graph& g) { return a(g) * b(g); }};
}

double first_gradient(const GraphFunctional& f, const Graph& g, ArcId e, double p) {
  check_open_p(p);
  return std::sqrt(p * (1 - p)) * (f(g.with_arc(e, true)) - f(g.with_arc(e, false)));
}

double second_gradient(const GraphFunctional& f, const Graph& g, ArcId e, ArcId other, double p_e,
                       double p_other) {
  check_open_p(p_e);
  check_open_p(p_other);
  if (e == other) {
    if (e.index >= g.slot_count()) throw std::domain_error("arc out of range");
    return 0.0;
  }
  const Graph on = g.with_arc(e, true);
  const Graph off = g.with_arc(e, false);
  const double diff = f(on.with_arc(other, true)) - f(on.with_arc(other, false)) - f(off.with_arc(other, true)) +
                      f(off.with_arc(other, false));
  return std::sqrt(p_e * (1 - p_e) * p_other * (1 - p_other)) * diff;
}

double product_rule_residual(const GraphFunctional& a, const GraphFunctional& b, const Graph& g, ArcId e,
                             double p) {
  check_open_p(p);
  const double s = std::sqrt(p * (1 - p));
  const Graph on = g.with_arc(e, true);
  const Graph off = g.with_arc(e, false);
  const double a_on = a(on), a_off = a(off), b_on = b(on), b_off = b(off);
  const double da = s * (a_on - a_off);
  const double db = s * (b_on - b_off);
  const double lhs = s * (a_on * b_on - a_off * b_off);
  const double rhs = da * b_off + a_off * db + da * db / s;
  return lhs - rhs;
}

FunctionalTable::FunctionalTable(const GraphFunctional& f, Node n, unsigned slot_cap)
    : n_(n), slots_(static_cast<unsigned>(arc_slots(n))) {
  const GraphEnumeration graphs(n, slot_cap);
  values_.resize(graphs.size());
  for (auto it = graphs.begin(); it != graphs.end(); ++it) values_[it.mask()] = f(*it);
}

SecondDifferenceExtremes second_difference_extremes(const FunctionalTable& table) {
  SecondDifferenceExtremes out;
  const unsigned slots = table.slots();
  std::vector<std::pair<Node, Node>> ends(slots);
  for (unsigned e = 0; e < slots; ++e) ends[e] = arc_endpoints(ArcId{e}, table.node_count());
  for (unsigned e = 0; e < slots; ++e) {
    for (unsigned f = e + 1; f < slots; ++f) {
      const bool shared = ends[e].first == ends[f].first || ends[e].first == ends[f].second ||
                          ends[e].second == ends[f].first || ends[e].second == ends[f].second;
      const std::uint64_t pair_bits = (std::uint64_t{1} << e) | (std::uint64_t{1} << f);
      double best = 0;
      for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
        if (mask & pair_bits) continue;
        best = std::max(best, std::abs(table.second_difference(mask, e, f)));
      }
      double& slot = shared ? out.intersecting : out.disjoint;
      slot = std::max(slot, best);
    }
  }
  return out;
}

Rational AtomicDistribution::mean() const {
  Rational s(0);
  for (const Atom& a : atoms) s += a.probability * exact_value(a.value);
  return s;
}

Rational AtomicDistribution::variance() const {
  const Rational mu = mean();
  Rational s(0);
  for (const Atom& a : atoms) {
    const Rational d = exact_value(a.value) - mu;
    s += a.probability * d * d;
  }
  return s;
}

Rational exact_expectation(const GraphFunctional& f, Node n, const Rational& p, unsigned slot_cap) {
  if (p < 0 || p > 1) throw std::domain_error("exact_expectation: p outside [0, 1]");
  Rational total(0);
  for (const Graph& g : enumerate_graphs(n, slot_cap)) total += graph_weight(g, p) * exact_value(f(g));
  return total;
}

AtomicDistribution exact_distribution(const GraphFunctional& f, Node n, const Rational& p, unsigned slot_cap) {
  if (p < 0 || p > 1) throw std::domain_error("exact_distribution: p outside [0, 1]");
  std::map<double, Rational> pmf;
  for (const Graph& g : enumerate_graphs(n, slot_cap)) {
    const Rational w = graph_weight(g, p);
    if (w == 0) continue;
    const double v = f(g);
    exact_value(v);
    pmf[v] += w;
  }
  AtomicDistribution d;
  d.atoms.reserve(pmf.size());
  for (auto& [value, prob] : pmf) d.atoms.push_back({value, prob});
  return d;
}

Rational first_gradient_fourth_moment(const GraphFunctional& f, Node n, const Rational& p, ArcId e) {
  if (p <= 0 || p >= 1) throw std::domain_error("first_gradient_fourth_moment: need 0 < p < 1");
  if (e.index >= arc_slots(n)) throw std::domain_error("arc out of range");
  Rational total(0);
  for (const Graph& g : enumerate_graphs(n)) {
    if (g.has_arc(e)) continue;
    // Each absent-e graph stands for both states of e, whose weights sum to
    // the weight of the remaining arcs.
    const Rational w = graph_weight(g, p) / (1 - p);
    Rational diff = exact_value(f(g.with_arc(e, true))) - exact_value(f(g));
    diff *= diff;
    total += w * diff * diff;
  }
  const Rational pq = p * (1 - p);
  return pq * pq * total;
}

BTerms b_terms(const GraphFunctional& f, Node n, std::span<const Rational> arc_probabilities,
               BTermOptions options) {
  const unsigned max_nodes = options.allow_six_nodes ? 6 : 5;
  if (n > max_nodes) {
    throw std::length_error("b_terms: n = " + std::to_string(n) + " exceeds the enumeration limit of " +
                            std::to_string(max_nodes) + " nodes");
  }
  const unsigned slots = static_cast<unsigned>(arc_slots(n));
  if (arc_probabilities.size() != slots) {
    throw std::invalid_argument("b_terms: need one probability per arc slot");
  }
  for (const Rational& p : arc_probabilities) {
    if (p <= 0 || p >= 1) throw std::domain_error("b_terms: arc probabilities must lie in (0, 1)");
  }
  if (slots == 0) throw std::domain_error("b_terms: zero variance (no arcs)");

  const FunctionalTable table(f, n, 20);
  const std::uint64_t count = table.size();
  const std::vector<Rational> exact_w = mask_weights(arc_probabilities, count);

  Rational mean(0);
  for (std::uint64_t m = 0; m < count; ++m) mean += exact_w[m] * exact_value(table.at(m));
  Rational var(0);
  for (std::uint64_t m = 0; m < count; ++m) {
    const Rational d = exact_value(table.at(m)) - mean;
    var += exact_w[m] * d * d;
  }
  if (var == 0) throw std::domain_error("b_terms: functional '" + f.label + "' has zero variance");
  const double sd = std::sqrt(var.get_d());

  std::vector<double> w(count);
  for (std::uint64_t m = 0; m < count; ++m) w[m] = exact_w[m].get_d();
  std::vector<double> pq(slots), scale(slots);
  for (unsigned e = 0; e < slots; ++e) {
    const double p = arc_probabilities[e].get_d();
    pq[e] = p * (1 - p);
    scale[e] = std::sqrt(pq[e]);
  }

  const std::size_t s = slots;
  std::vector<double> e4(s, 0.0);                // E[(D_k F)^4]
  std::vector<double> e22(s * s, 0.0);           // E[(D_j F)^2 (D_k F)^2]
  std::vector<double> e5(s * s, 0.0);            // E[(D_l D_k F)^4], index l*s+k
  std::vector<double> e2(s * s * s, 0.0);        // E[(D_l D_j F)^2 (D_l D_k F)^2], index (l*s+j)*s+k
  std::vector<double> d1(s), d2sq(s * s);

  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const double wm = w[mask];
    if (wm == 0) continue;
    for (unsigned e = 0; e < slots; ++e) d1[e] = scale[e] * table.difference(mask, e) / sd;
    for (unsigned l = 0; l < slots; ++l) {
      for (unsigned k = 0; k < slots; ++k) {
        const double v = l == k ? 0.0 : scale[l] * scale[k] * table.second_difference(mask, l, k) / sd;
        d2sq[l * s + k] = v * v;
      }
    }
    for (unsigned j = 0; j < slots; ++j) {
      const double dj2 = d1[j] * d1[j];
      e4[j] += wm * dj2 * dj2;
      for (unsigned k = 0; k < slots; ++k) e22[j * s + k] += wm * dj2 * d1[k] * d1[k];
    }
    for (unsigned l = 0; l < slots; ++l) {
      const double* row = &d2sq[l * s];
      for (unsigned j = 0; j < slots; ++j) {
        e5[l * s + j] += wm * row[j] * row[j];
        if (row[j] == 0) continue;
        const double a = wm * row[j];
        double* out = &e2[(l * s + j) * s];
        for (unsigned k = 0; k < slots; ++k) out[k] += a * row[k];
      }
    }
  }

  BTerms b;
  for (unsigned j = 0; j < slots; ++j) {
    for (unsigned k = 0; k < slots; ++k) {
      const double first = std::sqrt(e22[j * s + k]);
      for (unsigned l = 0; l < slots; ++l) {
        const double mixed = e2[(l * s + j) * s + k];
        b.b1 += first * std::sqrt(mixed);
        b.b2 += mixed / pq[l];
      }
    }
  }
  for (unsigned k = 0; k < slots; ++k) {
    b.b3 += e4[k] / pq[k];
    for (unsigned l = 0; l < slots; ++l) {
      const double fourth = e5[l * s + k];
      b.b4 += std::sqrt(e4[k]) * std::sqrt(fourth) / pq[k];
      b.b5 += fourth / (pq[k] * pq[l]);
    }
  }
  return b;
}

BTerms b_terms(const GraphFunctional& f, Node n, const Rational& p, BTermOptions options) {
  const std::vector<Rational> arc_p(arc_slots(n), p);
  return b_terms(f, n, arc_p, options);
}

double kolmogorov_bound(const BTerms& b) {
  if (b.b1 < 0 || b.b2 < 0 || b.b3 < 0 || b.b4 < 0 || b.b5 < 0) {
    throw std::domain_error("kolmogorov_bound: B terms must be non-negative");
  }
  return std::sqrt(15.0) / 2 * std::sqrt(b.b1) + std::sqrt(3.0) / 2 * std::sqrt(b.b2) + 2 * std::sqrt(b.b3) +
         2 * std::sqrt(6.0) * std::sqrt(b.b4) + 2 * std::sqrt(3.0) * std::sqrt(b.b5);
}

double exact_kolmogorov_distance(const AtomicDistribution& d, double mean, double sd) {
  if (!(sd > 0)) throw std::domain_error("exact_kolmogorov_distance: sd must be positive");
  if (d.atoms.empty()) throw std::domain_error("exact_kolmogorov_distance: empty distribution");
  double sup = 0;
  Rational cumulative(0);
  for (const Atom& a : d.atoms) {
    const double phi = normal_cdf((a.value - mean) / sd);
    const double before = cumulative.get_d();
    cumulative += a.probability;
    const double after = cumulative.get_d();
    sup = std::max({sup, std::abs(before - phi), std::abs(after - phi)});
  }
  return sup;
}

}  // namespace cosmo
