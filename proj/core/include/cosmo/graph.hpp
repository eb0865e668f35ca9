#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

#include "cosmo/rational.hpp"

namespace cosmo {

class CounterRng;

// Nodes are labelled 1..n.
using Node = std::uint32_t;

// Lexicographic rank of an unordered node pair (u, v), u < v, among all
// C(n, 2) pairs.
struct ArcId {
  std::uint64_t index = 0;

  friend constexpr auto operator<=>(ArcId, ArcId) = default;
};

constexpr std::uint64_t arc_slots(std::uint64_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

ArcId arc_index(Node u, Node v, Node n);
std::pair<Node, Node> arc_endpoints(ArcId id, Node n);

// Simple graph on nodes 1..n. The arc set is kept as a sorted list of arc
// ranks, which is what the large-n sampler produces; small graphs can also be
// addressed by a bitmask over the C(n, 2) slots.
class Graph {
 public:
  explicit Graph(Node n);

  static Graph from_arcs(Node n, std::vector<ArcId> arcs);
  static Graph from_mask(Node n, std::uint64_t mask);
  static Graph complete(Node n);

  Node node_count() const { return n_; }
  std::uint64_t slot_count() const { return arc_slots(n_); }
  std::uint64_t arc_count() const { return arcs_.size(); }
  std::span<const ArcId> arcs() const { return arcs_; }
  bool has_arc(ArcId e) const;

  // Requires slot_count() <= 64.
  std::uint64_t mask() const;

  // Copy of this graph with membership of e flipped.
  Graph with_toggled(ArcId e) const;
  Graph with_arc(ArcId e, bool present) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  struct SortedTag {};
  Graph(Node n, std::vector<ArcId> sorted_arcs, SortedTag);
  void check_slot(ArcId e) const;

  Node n_;
  std::vector<ArcId> arcs_;

  friend Graph sample_dense(Node, double, const CounterRng&);
  friend Graph sample_sparse(Node, double, const CounterRng&);
};

struct GraphStats {
  std::uint64_t m = 0;
  std::uint64_t leaves = 0;
  std::uint64_t isolated = 0;
  std::uint64_t non_isolated = 0;
  std::vector<std::uint32_t> degrees;

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

GraphStats compute_stats(const Graph& g);

Graph toggle_arc(const Graph& g, ArcId e);

// Each of the C(n,2) arcs is present independently with probability p. The
// dense sampler draws one uniform per arc rank; the sparse sampler jumps
// between present arcs with geometric gaps.
Graph sample_dense(Node n, double p, const CounterRng& stream);
Graph sample_sparse(Node n, double p, const CounterRng& stream);

inline constexpr unsigned kDefaultEnumerationCap = 20;

// All 2^C(n,2) labelled graphs on n nodes in increasing bitmask order.
class GraphEnumeration {
 public:
  explicit GraphEnumeration(Node n, unsigned slot_cap = kDefaultEnumerationCap);

  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(Node n, std::uint64_t mask) : n_(n), mask_(mask) {}
    Graph operator*() const { return Graph::from_mask(n_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++mask_;
      return old;
    }
    std::uint64_t mask() const { return mask_; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    Node n_ = 0;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count_}; }
  std::uint64_t size() const { return count_; }
  Node node_count() const { return n_; }

 private:
  Node n_;
  std::uint64_t count_;
};

GraphEnumeration enumerate_graphs(Node n, unsigned slot_cap = kDefaultEnumerationCap);

// p^m (1-p)^(C(n,2)-m).
Rational graph_weight(const Graph& g, const Rational& p);

}  // namespace cosmo
