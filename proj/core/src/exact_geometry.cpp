#include "cosmo/exact_geometry.hpp"

#include <stdexcept>
#include <string>

#include "cosmo/simplex.hpp"

namespace cosmo {
namespace {

bool is_arc_role(VertexRole r) {
  return r == VertexRole::arc_t || r == VertexRole::arc_y_ij || r == VertexRole::arc_y_ji ||
         r == VertexRole::arc_unit;
}

bool is_y(VertexRole r) { return r == VertexRole::arc_y_ij || r == VertexRole::arc_y_ji; }

std::vector<LatticePoint> arc_points(const Graph& g, bool with_unit) {
  const std::size_t n = g.node_count();
  const std::size_t dim = n + g.arc_count();
  std::vector<LatticePoint> points;
  points.reserve(g.arc_count() * (with_unit ? 4 : 3));
  std::size_t slot = 0;
  for (ArcId f : g.arcs()) {
    const auto [i, j] = arc_endpoints(f, g.node_count());
    const std::size_t fi = n + slot++;
    auto make = [&](VertexRole role, int ci, int cj, int cf) {
      LatticePoint pt;
      pt.coords.assign(dim, 0);
      pt.coords[i - 1] = ci;
      pt.coords[j - 1] = cj;
      pt.coords[fi] = cf;
      pt.role = role;
      pt.arc = f;
      pt.tail = i;
      pt.head = j;
      return pt;
    };
    points.push_back(make(VertexRole::arc_t, 1, 1, -1));
    points.push_back(make(VertexRole::arc_y_ij, 1, -1, 1));
    points.push_back(make(VertexRole::arc_y_ji, -1, 1, 1));
    if (with_unit) points.push_back(make(VertexRole::arc_unit, 0, 0, 1));
  }
  return points;
}

void check_distinct(std::span<const LatticePoint> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i].coords == vertices[j].coords) {
        throw std::domain_error("vertex list contains duplicate points " + std::to_string(i) + " and " +
                                std::to_string(j));
      }
    }
  }
}

bool edge_lp(std::span<const LatticePoint> vertices, std::size_t a, std::size_t b) {
  const std::size_t dim = vertices[a].coords.size();
  LinearSystem sys;
  sys.variables = dim;
  // Eliminating beta = c.v_a leaves c.(v_b - v_a) = 0 and c.(v_a - w) >= 1.
  std::vector<Rational> row(dim);
  for (std::size_t k = 0; k < dim; ++k) row[k] = vertices[b].coords[k] - vertices[a].coords[k];
  sys.add_equality(row, 0);
  for (std::size_t w = 0; w < vertices.size(); ++w) {
    if (w == a || w == b) continue;
    for (std::size_t k = 0; k < dim; ++k) row[k] = vertices[a].coords[k] - vertices[w].coords[k];
    sys.add_inequality(row, 1);
  }
  auto point = find_feasible_point(sys);
  if (point && !sys.satisfied_by(*point)) {
    throw std::logic_error("simplex returned a point violating the edge certificate");
  }
  return point.has_value();
}

}  // namespace

void EdgeSet::insert(std::size_t a, std::size_t b) {
  if (a == b) throw std::domain_error("edge endpoints must differ");
  pairs_.emplace(std::min(a, b), std::max(a, b));
}

bool EdgeSet::contains(std::size_t a, std::size_t b) const {
  return pairs_.count({std::min(a, b), std::max(a, b)}) > 0;
}

std::vector<LatticePoint> cosmo_vertices(const Graph& g) { return arc_points(g, false); }

std::vector<LatticePoint> tri_vertex_set(const Graph& g) {
  auto points = arc_points(g, true);
  const GraphStats stats = compute_stats(g);
  const std::size_t n = g.node_count();
  const std::size_t dim = n + g.arc_count();
  for (Node v = 1; v <= n; ++v) {
    if (stats.degrees[v - 1] == 0) continue;
    LatticePoint pt;
    pt.coords.assign(dim, 0);
    pt.coords[v - 1] = 1;
    pt.role = VertexRole::node_unit;
    pt.tail = v;
    points.push_back(std::move(pt));
  }
  return points;
}

bool is_polytope_edge(std::span<const LatticePoint> vertices, std::size_t a, std::size_t b) {
  if (a >= vertices.size() || b >= vertices.size()) throw std::out_of_range("vertex index out of range");
  if (a == b) throw std::domain_error("is_polytope_edge: a and b must differ");
  for (const auto& v : vertices) {
    if (v.coords.size() != vertices[a].coords.size()) throw std::domain_error("mixed ambient dimensions");
  }
  check_distinct(vertices);
  return edge_lp(vertices, a, b);
}

EdgeSet oracle_edge_set(const Graph& g, std::uint64_t arc_cap) {
  if (g.arc_count() > arc_cap) {
    throw std::length_error("oracle_edge_set: " + std::to_string(g.arc_count()) +
                            " arcs exceed the LP oracle cap of " + std::to_string(arc_cap));
  }
  const auto vertices = cosmo_vertices(g);
  check_distinct(vertices);
  EdgeSet edges;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (edge_lp(vertices, a, b)) edges.insert(a, b);
    }
  }
  return edges;
}

EdgeSet characterized_cosmo_edges(const Graph& g) {
  const auto vertices = cosmo_vertices(g);
  const GraphStats stats = compute_stats(g);
  EdgeSet edges;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      const auto& x = vertices[a];
      const auto& y = vertices[b];
      if (x.arc != y.arc) {
        edges.insert(a, b);
        continue;
      }
      if (is_y(x.role) && is_y(y.role)) {
        edges.insert(a, b);
        continue;
      }
      const LatticePoint& yv = is_y(x.role) ? x : y;
      if (stats.degrees[yv.y_source() - 1] == 1) edges.insert(a, b);
    }
  }
  return edges;
}

EdgeSet characterized_tri_edges(const Graph& g) {
  const auto vertices = tri_vertex_set(g);
  EdgeSet edges;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      const auto& x = vertices[a];
      const auto& y = vertices[b];
      const bool x_arc = is_arc_role(x.role);
      const bool y_arc = is_arc_role(y.role);
      if (x_arc && y_arc) {
        if (x.arc != y.arc) {
          edges.insert(a, b);
        } else if ((x.role == VertexRole::arc_unit && is_y(y.role)) ||
                   (y.role == VertexRole::arc_unit && is_y(x.role))) {
          edges.insert(a, b);
        }
        continue;
      }
      if (!x_arc && !y_arc) {
        edges.insert(a, b);
        continue;
      }
      const LatticePoint& node = x_arc ? y : x;
      const LatticePoint& other = x_arc ? x : y;
      if (!(is_y(other.role) && other.y_source() == node.tail)) edges.insert(a, b);
    }
  }
  return edges;
}

int polytope_dimension(const Graph& g) {
  const auto vertices = cosmo_vertices(g);
  if (vertices.empty()) return -1;
  std::vector<std::vector<Rational>> diffs;
  diffs.reserve(vertices.size() - 1);
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    std::vector<Rational> row(vertices[k].coords.size());
    for (std::size_t c = 0; c < row.size(); ++c) row[c] = vertices[k].coords[c] - vertices[0].coords[c];
    diffs.push_back(std::move(row));
  }
  return static_cast<int>(exact_rank(diffs));
}

}  // namespace cosmo
