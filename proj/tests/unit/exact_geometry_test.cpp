#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cosmo/closed_forms.hpp"
#include "cosmo/exact_geometry.hpp"
#include "support.hpp"

namespace cosmo {
namespace {

LatticePoint point(std::vector<int> coords) {
  LatticePoint p;
  p.coords = std::move(coords);
  return p;
}

std::vector<LatticePoint> square() {
  return {point({1, 0}), point({0, 1}), point({-1, 0}), point({0, -1})};
}

TEST(CosmoVertices, SingleArcCoordinates) {
  const auto v = cosmo_vertices(Graph::complete(2));
  ASSERT_EQ(v.size(), 3u);
  std::vector<std::vector<int>> coords;
  for (const auto& p : v) coords.push_back(p.coords);
  std::sort(coords.begin(), coords.end());
  const std::vector<std::vector<int>> expected{{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
  EXPECT_EQ(coords, expected);
}

TEST(CosmoVertices, Shapes) {
  EXPECT_TRUE(cosmo_vertices(Graph(3)).empty());
  const auto v = cosmo_vertices(testing::triangle());
  ASSERT_EQ(v.size(), 9u);
  for (const auto& p : v) {
    ASSERT_EQ(p.coords.size(), 6u);
    int node_nonzero = 0;
    int arc_nonzero = 0;
    for (int i = 0; i < 3; ++i) node_nonzero += p.coords[i] != 0;
    for (int i = 3; i < 6; ++i) arc_nonzero += p.coords[i] != 0;
    EXPECT_EQ(node_nonzero, 2);
    EXPECT_EQ(arc_nonzero, 1);
  }
}

TEST(CosmoVertices, RolesMatchCoordinates) {
  const Graph g = testing::path3();
  for (const auto& p : cosmo_vertices(g)) {
    const auto [i, j] = arc_endpoints(p.arc, 3);
    EXPECT_EQ(p.tail, i);
    EXPECT_EQ(p.head, j);
    const int ci = p.coords[i - 1];
    const int cj = p.coords[j - 1];
    switch (p.role) {
      case VertexRole::arc_t: EXPECT_TRUE(ci == 1 && cj == 1); break;
      case VertexRole::arc_y_ij: EXPECT_TRUE(ci == 1 && cj == -1); break;
      case VertexRole::arc_y_ji: EXPECT_TRUE(ci == -1 && cj == 1); break;
      default: ADD_FAILURE() << "unexpected role";
    }
  }
}

TEST(TriVertexSet, Sizes) {
  EXPECT_EQ(tri_vertex_set(Graph::complete(2)).size(), 6u);
  EXPECT_EQ(tri_vertex_set(testing::triangle()).size(), 15u);
  EXPECT_TRUE(tri_vertex_set(Graph(4)).empty());
  EXPECT_EQ(tri_vertex_set(testing::single_arc(4)).size(), 6u);
}

TEST(IsPolytopeEdge, TriangleAndSquare) {
  const auto v = cosmo_vertices(Graph::complete(2));
  EXPECT_TRUE(is_polytope_edge(v, 0, 1));
  EXPECT_TRUE(is_polytope_edge(v, 0, 2));
  EXPECT_TRUE(is_polytope_edge(v, 1, 2));

  const auto sq = square();
  EXPECT_FALSE(is_polytope_edge(sq, 0, 2));
  EXPECT_FALSE(is_polytope_edge(sq, 1, 3));
  EXPECT_TRUE(is_polytope_edge(sq, 0, 1));
  EXPECT_TRUE(is_polytope_edge(sq, 3, 0));
}

TEST(IsPolytopeEdge, InteriorAndCollinearPoints) {
  // (0,0) is interior; (0,-2) sits inside the bottom side, so no functional
  // isolates either half of it.
  const std::vector<LatticePoint> pts{point({-2, -2}), point({2, -2}), point({0, 2}), point({0, -2}), point({0, 0})};
  EXPECT_FALSE(is_polytope_edge(pts, 0, 4));
  EXPECT_FALSE(is_polytope_edge(pts, 0, 1));
  EXPECT_FALSE(is_polytope_edge(pts, 0, 3));
  EXPECT_TRUE(is_polytope_edge(pts, 0, 2));
  EXPECT_TRUE(is_polytope_edge(pts, 1, 2));
}

TEST(IsPolytopeEdge, Cube) {
  std::vector<LatticePoint> cube;
  for (int m = 0; m < 8; ++m) cube.push_back(point({m & 1, (m >> 1) & 1, (m >> 2) & 1}));
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      const bool adjacent = __builtin_popcount(a ^ b) == 1;
      EXPECT_EQ(is_polytope_edge(cube, a, b), adjacent) << a << " " << b;
    }
  }
}

TEST(IsPolytopeEdge, Errors) {
  auto sq = square();
  EXPECT_THROW(is_polytope_edge(sq, 1, 1), std::domain_error);
  sq.push_back(point({1, 0}));
  EXPECT_THROW(is_polytope_edge(sq, 0, 1), std::domain_error);
}

TEST(OracleEdgeSet, Examples) {
  EXPECT_EQ(oracle_edge_set(testing::single_arc(2)).size(), 3u);
  EXPECT_EQ(oracle_edge_set(testing::path3()).size(), 13u);
  EXPECT_EQ(oracle_edge_set(testing::triangle()).size(), 30u);
  EXPECT_EQ(oracle_edge_set(testing::star4()).size(), 33u);
  EXPECT_EQ(oracle_edge_set(Graph(3)).size(), 0u);
}

TEST(OracleEdgeSet, RefusesAboveCap) {
  EXPECT_THROW(oracle_edge_set(Graph::complete(5)), std::length_error);
}

TEST(CharacterizedCosmoEdges, Examples) {
  const EdgeSet one = characterized_cosmo_edges(testing::single_arc(2));
  EXPECT_EQ(one.size(), 3u);
  EXPECT_EQ(characterized_cosmo_edges(testing::triangle()).size(), 30u);
  EXPECT_EQ(characterized_cosmo_edges(testing::star4()).size(), 33u);
}

TEST(CharacterizedCosmoEdges, TriangleHasNoLeafEdges) {
  const Graph g = testing::triangle();
  const auto v = cosmo_vertices(g);
  const EdgeSet edges = characterized_cosmo_edges(g);
  int same_arc = 0;
  for (const auto& [a, b] : edges.pairs()) {
    if (v[a].arc != v[b].arc) continue;
    ++same_arc;
    EXPECT_NE(v[a].role, VertexRole::arc_t);
    EXPECT_NE(v[b].role, VertexRole::arc_t);
  }
  EXPECT_EQ(same_arc, 3);
}

TEST(CharacterizedCosmoEdges, MatchesOracleOnAllFourNodeGraphs) {
  for (const Graph& g : enumerate_graphs(4)) {
    const GraphStats s = compute_stats(g);
    const EdgeSet oracle = oracle_edge_set(g);
    const EdgeSet rules = characterized_cosmo_edges(g);
    EXPECT_EQ(oracle, rules) << "mask " << g.mask();
    EXPECT_EQ(rules.size(), cosmo_edge_count(s.m, s.leaves));
  }
}

TEST(CharacterizedTriEdges, Examples) {
  EXPECT_EQ(characterized_tri_edges(Graph::complete(2)).size(), 9u);
  EXPECT_EQ(characterized_tri_edges(testing::path3()).size(), 43u);
  EXPECT_EQ(characterized_tri_edges(testing::triangle()).size(), 87u);
}

TEST(CharacterizedTriEdges, ExcludesOnlyTheOwnYPoint) {
  const Graph g = Graph::complete(2);
  const auto v = tri_vertex_set(g);
  const EdgeSet edges = characterized_tri_edges(g);
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v[a].role != VertexRole::node_unit) continue;
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (a == b) continue;
      const bool own_y = (v[b].role == VertexRole::arc_y_ij || v[b].role == VertexRole::arc_y_ji) &&
                         v[b].y_source() == v[a].tail;
      EXPECT_EQ(edges.contains(a, b), !own_y);
    }
  }
}

TEST(CharacterizedTriEdges, FormulaOnAllSmallGraphs) {
  for (Node n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const GraphStats s = compute_stats(g);
      ASSERT_EQ(characterized_tri_edges(g).size(), tri_edge_count(s.m, s.non_isolated)) << n << " " << g.mask();
    }
  }
}

TEST(PolytopeDimension, Examples) {
  EXPECT_EQ(polytope_dimension(Graph::complete(2)), 2);
  EXPECT_EQ(polytope_dimension(testing::single_arc(3)), 2);
  EXPECT_EQ(polytope_dimension(testing::triangle()), 5);
  EXPECT_EQ(polytope_dimension(Graph(3)), -1);
}

TEST(PolytopeDimension, FormulaOnAllSmallGraphs) {
  for (Node n = 2; n <= 4; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      if (g.arc_count() == 0) continue;
      const GraphStats s = compute_stats(g);
      EXPECT_EQ(polytope_dimension(g), static_cast<int>(n + s.m - 1 - s.isolated));
    }
  }
}

TEST(EdgeSet, Unordered) {
  EdgeSet e;
  e.insert(3, 1);
  EXPECT_TRUE(e.contains(1, 3));
  EXPECT_TRUE(e.contains(3, 1));
  e.insert(1, 3);
  EXPECT_EQ(e.size(), 1u);
}

}  // namespace
}  // namespace cosmo
