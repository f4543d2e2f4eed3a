#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "lgl/graph.hpp"

namespace lgl {

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph petersen_graph();

struct LineGraph {
  Graph graph;
  std::vector<Vertex> vertex_of_edge;  // g-edge id -> L(g) vertex id (identity here)
};

// Vertices are the edges of g; two are adjacent when the edges share one endpoint.
LineGraph line_graph(const Graph& g);

struct Subdivision {
  Graph graph;
  std::vector<Vertex> vertex_of_vertex;  // old vertex -> new vertex
  std::vector<Vertex> midpoint_of_edge;  // old edge -> new midpoint vertex
};

// Original vertices keep ids 0..n-1, the midpoint of edge e gets id n+e.
Subdivision subdivision_graph(const Graph& g);

// L(S(z)) for 3-regular z. Throws InputError otherwise.
Graph hoffman_layout(const Graph& z);

struct TessellationBall {
  Graph graph;
  std::size_t k = 0;
  std::size_t r = 0;
  std::vector<std::vector<Vertex>> faces;  // each a k-cycle in traversal order
  std::vector<std::size_t> shell_of_face;
  std::vector<Vertex> boundary_vertices;  // outer boundary cycle, empty once closed
  bool closed = false;
};

// Central k-gon plus r shells of faces of the trivalent {k,3} tiling, where shell j+1
// holds every face sharing a vertex with shells <= j.
TessellationBall tessellation_ball(std::size_t k, std::size_t r);

// Ball of radius r in the 3-regular tree, 3*2^r - 2 vertices.
Graph tree_ball(std::size_t r);

// Truncated icosahedron. Vertex ids follow lexicographic order of the coordinates.
Graph c60_graph();
std::vector<std::array<double, 3>> c60_coordinates();

// Faces of a graph embedded on a sphere around the origin, traced from the
// cyclic order of neighbors in each tangent plane.
std::vector<std::vector<Vertex>> trace_spherical_faces(const Graph& g,
                                                       const std::vector<std::array<double, 3>>& pos);

}  // namespace lgl
