#include "cosmo/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cosmo/rng.hpp"

namespace cosmo {
namespace {

// Rank of the first arc (u, u+1) in row u.
constexpr std::uint64_t row_start(std::uint64_t u, std::uint64_t n) {
  return (u - 1) * (2 * n - u) / 2;
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("arc probability must lie in [0, 1], got " + std::to_string(p));
  }
}

}  // namespace

ArcId arc_index(Node u, Node v, Node n) {
  if (u < 1 || v > n || u >= v) {
    throw std::domain_error("arc_index: need 1 <= u < v <= n, got (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") with n = " + std::to_string(n));
  }
  return ArcId{row_start(u, n) + (v - u - 1)};
}

std::pair<Node, Node> arc_endpoints(ArcId id, Node n) {
  if (id.index >= arc_slots(n)) {
    throw std::domain_error("arc_endpoints: arc " + std::to_string(id.index) + " out of range for n = " +
                            std::to_string(n));
  }
  // Largest u with row_start(u) <= id.
  std::uint64_t lo = 1;
  std::uint64_t hi = n - 1;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (row_start(mid, n) <= id.index) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  auto u = static_cast<Node>(lo);
  auto v = static_cast<Node>(id.index - row_start(lo, n) + lo + 1);
  return {u, v};
}

Graph::Graph(Node n) : n_(n) {
  if (n < 1) {
    throw std::domain_error("graph needs at least one node");
  }
}

Graph::Graph(Node n, std::vector<ArcId> sorted_arcs, SortedTag) : n_(n), arcs_(std::move(sorted_arcs)) {}

Graph Graph::from_arcs(Node n, std::vector<ArcId> arcs) {
  Graph g(n);
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) {
    throw std::domain_error("graph arcs must be distinct");
  }
  if (!arcs.empty() && arcs.back().index >= g.slot_count()) {
    throw std::domain_error("arc rank out of range");
  }
  g.arcs_ = std::move(arcs);
  return g;
}

Graph Graph::from_mask(Node n, std::uint64_t mask) {
  Graph g(n);
  const std::uint64_t slots = g.slot_count();
  if (slots > 64 || (slots < 64 && (mask >> slots) != 0)) {
    throw std::domain_error("mask does not fit the arc slots of this node count");
  }
  g.arcs_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    g.arcs_.push_back(ArcId{static_cast<std::uint64_t>(std::countr_zero(mask))});
    mask &= mask - 1;
  }
  return g;
}

Graph Graph::complete(Node n) {
  Graph g(n);
  g.arcs_.resize(g.slot_count());
  for (std::uint64_t i = 0; i < g.arcs_.size(); ++i) {
    g.arcs_[i] = ArcId{i};
  }
  return g;
}

void Graph::check_slot(ArcId e) const {
  if (e.index >= slot_count()) {
    throw std::domain_error("arc " + std::to_string(e.index) + " out of range for n = " + std::to_string(n_));
  }
}

bool Graph::has_arc(ArcId e) const { return std::binary_search(arcs_.begin(), arcs_.end(), e); }

std::uint64_t Graph::mask() const {
  if (slot_count() > 64) {
    throw std::domain_error("graph has more than 64 arc slots; no bitmask form");
  }
  std::uint64_t bits = 0;
  for (ArcId e : arcs_) bits |= std::uint64_t{1} << e.index;
  return bits;
}

Graph Graph::with_arc(ArcId e, bool present) const {
  check_slot(e);
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), e);
  const bool here = it != arcs_.end() && *it == e;
  if (here == present) return *this;
  std::vector<ArcId> arcs;
  arcs.reserve(arcs_.size() + 1);
  arcs.insert(arcs.end(), arcs_.begin(), it);
  if (present) {
    arcs.push_back(e);
    arcs.insert(arcs.end(), it, arcs_.end());
  } else {
    arcs.insert(arcs.end(), it + 1, arcs_.end());
  }
  return Graph(n_, std::move(arcs), SortedTag{});
}

Graph Graph::with_toggled(ArcId e) const {
  check_slot(e);
  return with_arc(e, !has_arc(e));
}

Graph toggle_arc(const Graph& g, ArcId e) { return g.with_toggled(e); }

GraphStats compute_stats(const Graph& g) {
  const std::uint64_t n = g.node_count();
  GraphStats s;
  s.m = g.arc_count();
  s.degrees.assign(n, 0);
  // Arcs are sorted, so the row (smaller endpoint) only moves forward.
  std::uint64_t u = 1;
  std::uint64_t next_row = n > 1 ? row_start(2, n) : 0;
  for (ArcId e : g.arcs()) {
    while (u + 1 < n && e.index >= next_row) {
      ++u;
      next_row = row_start(u + 1, n);
    }
    const std::uint64_t v = e.index - row_start(u, n) + u + 1;
    ++s.degrees[u - 1];
    ++s.degrees[v - 1];
  }
  for (std::uint32_t d : s.degrees) {
    if (d == 0) ++s.isolated;
    if (d == 1) ++s.leaves;
  }
  s.non_isolated = n - s.isolated;
  return s;
}

Graph sample_dense(Node n, double p, const CounterRng& stream) {
  check_probability(p);
  Graph g(n);
  const std::uint64_t slots = g.slot_count();
  std::vector<ArcId> arcs;
  for (std::uint64_t e = 0; e < slots; ++e) {
    if (stream.uniform_at(e) < p) arcs.push_back(ArcId{e});
  }
  return Graph(n, std::move(arcs), Graph::SortedTag{});
}

Graph sample_sparse(Node n, double p, const CounterRng& stream) {
  check_probability(p);
  if (p == 1.0) return Graph::complete(n);
  Graph g(n);
  const std::uint64_t slots = g.slot_count();
  std::vector<ArcId> arcs;
  if (p == 0.0 || slots == 0) return g;
  arcs.reserve(static_cast<std::size_t>(static_cast<double>(slots) * p * 1.1 + 16));
  // Gap before the next present arc is Geometric(p) on {0, 1, ...}:
  // floor(log U / log(1-p)) with U uniform on (0, 1].
  const double log_q = std::log1p(-p);
  RngCursor cursor(stream);
  std::uint64_t next = 0;
  while (true) {
    const double gap = std::floor(std::log(cursor.next_uniform_open()) / log_q);
    if (!(gap < static_cast<double>(slots - next))) break;
    next += static_cast<std::uint64_t>(gap);
    arcs.push_back(ArcId{next});
    ++next;
    if (next >= slots) break;
  }
  return Graph(n, std::move(arcs), Graph::SortedTag{});
}

GraphEnumeration::GraphEnumeration(Node n, unsigned slot_cap) : n_(n) {
  const std::uint64_t slots = arc_slots(n);
  if (n < 1) {
    throw std::domain_error("enumeration needs at least one node");
  }
  if (slots > slot_cap || slots >= 63) {
    throw std::length_error("refusing to enumerate graphs on " + std::to_string(n) + " nodes: " +
                            std::to_string(slots) + " arc slots exceed the enumeration cap of " +
                            std::to_string(slot_cap));
  }
  count_ = std::uint64_t{1} << slots;
}

GraphEnumeration enumerate_graphs(Node n, unsigned slot_cap) { return GraphEnumeration(n, slot_cap); }

Rational graph_weight(const Graph& g, const Rational& p) {
  if (p < 0 || p > 1) {
    throw std::domain_error("graph_weight: p outside [0, 1]");
  }
  return power(p, g.arc_count()) * power(Rational(1 - p), g.slot_count() - g.arc_count());
}

}  // namespace cosmo
