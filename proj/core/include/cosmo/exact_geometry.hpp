#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "cosmo/graph.hpp"

namespace cosmo {

// Which lattice point of the polytope (or of its triangulation) a coordinate
// vector is. For an arc f = {i, j} with i < j:
//   t_f  = e_i + e_j - e_f,  y_ij = e_i - e_j + e_f,  y_ji = -e_i + e_j + e_f,
// plus the unit vectors e_f and e_v used by the triangulation.
enum class VertexRole { arc_t, arc_y_ij, arc_y_ji, arc_unit, node_unit, generic };

struct LatticePoint {
  std::vector<int> coords;
  VertexRole role = VertexRole::generic;
  ArcId arc{};     // defining arc for the arc_* roles
  Node tail = 0;   // i for arcs; the node for node_unit
  Node head = 0;   // j for arcs

  // The graph node "owning" this point for leaf/exclusion rules: i for y_ij,
  // j for y_ji.
  Node y_source() const { return role == VertexRole::arc_y_ij ? tail : head; }
};

// Unordered pairs of indices into a vertex list.
class EdgeSet {
 public:
  void insert(std::size_t a, std::size_t b);
  bool contains(std::size_t a, std::size_t b) const;
  std::size_t size() const { return pairs_.size(); }
  const std::set<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::set<std::pair<std::size_t, std::size_t>> pairs_;
};

// Ambient coordinates: nodes 1..n first, then the present arcs in rank order.
std::vector<LatticePoint> cosmo_vertices(const Graph& g);

// 4 points per arc (t_f, y_ij, y_ji, e_f), then e_v for each non-isolated v.
std::vector<LatticePoint> tri_vertex_set(const Graph& g);

// True iff some linear functional c and level beta satisfy
// c.v_a = c.v_b = beta and c.w <= beta - 1 for every other vertex w.
bool is_polytope_edge(std::span<const LatticePoint> vertices, std::size_t a, std::size_t b);

inline constexpr std::uint64_t kOracleArcCap = 8;

// Edge set of the polytope by running the supporting-functional LP on every
// pair of vertices. Indices refer to cosmo_vertices(g).
EdgeSet oracle_edge_set(const Graph& g, std::uint64_t arc_cap = kOracleArcCap);

// Combinatorial edge description: points of different arcs always span an
// edge; within an arc, {y_ij, y_ji} always and {y_ij, t_f} iff i is a leaf.
EdgeSet characterized_cosmo_edges(const Graph& g);

// Triangulation edges over tri_vertex_set(g): points of different arcs;
// {e_f, y_ij} and {e_f, y_ji}; e_v with everything except y_vj for arcs {v, j}.
EdgeSet characterized_tri_edges(const Graph& g);

// Affine dimension of the polytope from the exact rank of vertex differences;
// -1 for the empty graph.
int polytope_dimension(const Graph& g);

}  // namespace cosmo
