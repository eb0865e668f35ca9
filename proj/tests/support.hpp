#pragma once

// Brute-force helpers shared by the tests. Everything here works from the
// raw enumeration of labelled graphs and never calls the closed forms.

#include <cstdint>
#include <functional>
#include <vector>

#include "cosmo/graph.hpp"
#include "cosmo/rational.hpp"

namespace cosmo::testing {

struct EnumeratedMoments {
  Rational mean{0};
  Rational variance{0};
};

// Mean and variance of stat(g) under G(n, p), by summing over all graphs.
inline EnumeratedMoments enumerated_moments(Node n, const Rational& p,
                                            const std::function<Rational(const Graph&)>& stat) {
  Rational first(0);
  Rational second(0);
  for (const Graph& g : enumerate_graphs(n)) {
    const Rational w = graph_weight(g, p);
    const Rational v = stat(g);
    first += w * v;
    second += w * v * v;
  }
  return {first, second - first * first};
}

inline Rational enumerated_covariance(Node n, const Rational& p, const std::function<Rational(const Graph&)>& x,
                                      const std::function<Rational(const Graph&)>& y) {
  Rational ex(0), ey(0), exy(0);
  for (const Graph& g : enumerate_graphs(n)) {
    const Rational w = graph_weight(g, p);
    const Rational a = x(g);
    const Rational b = y(g);
    ex += w * a;
    ey += w * b;
    exy += w * a * b;
  }
  return exy - ex * ey;
}

// Degrees straight from the arc list, endpoint by endpoint.
inline std::vector<int> naive_degrees(const Graph& g) {
  std::vector<int> deg(g.node_count(), 0);
  for (ArcId e : g.arcs()) {
    const auto [u, v] = arc_endpoints(e, g.node_count());
    ++deg[u - 1];
    ++deg[v - 1];
  }
  return deg;
}

inline std::uint64_t naive_leaves(const Graph& g) {
  std::uint64_t c = 0;
  for (int d : naive_degrees(g)) c += d == 1;
  return c;
}

inline std::uint64_t naive_non_isolated(const Graph& g) {
  std::uint64_t c = 0;
  for (int d : naive_degrees(g)) c += d >= 1;
  return c;
}

inline Rational choose2(std::uint64_t k) { return Rational(k * (k - (k > 0)) / 2); }

// Named small graphs.
inline Graph triangle() { return Graph::complete(3); }
inline Graph single_arc(Node n) { return Graph::from_arcs(n, {arc_index(1, 2, n)}); }
inline Graph path3() { return Graph::from_arcs(3, {arc_index(1, 2, 3), arc_index(2, 3, 3)}); }
inline Graph star4() { return Graph::from_arcs(4, {arc_index(1, 2, 4), arc_index(1, 3, 4), arc_index(1, 4, 4)}); }

}  // namespace cosmo::testing
