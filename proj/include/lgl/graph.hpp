#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lgl {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// Symmetric (full-wave) or antisymmetric (half-wave) edge modes.
enum class Flavor { s, a };

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// One entry of a vertex's neighbor list: the neighbor and the edge reaching it.
struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

// Undirected simple graph. Immutable after construction; edge ids follow
// insertion order and never change.
class Graph {
 public:
  Graph() = default;
  // Throws InputError on self-loops, duplicate edges or out-of-range ids.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  // Neighbors of v sorted by neighbor id.
  std::span<const Incidence> incident(Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const noexcept;

  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return edge_between(a, b).has_value(); }

  // Degree if every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const;

  // Same graph with edges reordered as in the text format (u < v, lexicographic).
  Graph canonical() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adjacency_;
};

// Graph plus a head/foot choice per edge. head(e) is e+, foot(e) is e-.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  // flip[e] == false means foot = edges[e].u, head = edges[e].v.
  OrientedGraph(Graph base, std::vector<bool> flip);

  // foot = smaller vertex id.
  static OrientedGraph with_default_orientation(Graph base);

  const Graph& base() const noexcept { return base_; }
  Vertex head(EdgeId e) const;
  Vertex foot(EdgeId e) const;
  const std::vector<bool>& flips() const noexcept { return flip_; }

 private:
  Graph base_;
  std::vector<bool> flip_;
};

std::size_t degree(const Graph& g, Vertex v);

struct BipartiteResult {
  bool bipartite = false;
  // color[v] in {0, 1}; present only when bipartite.
  std::optional<std::vector<std::uint8_t>> coloring;
};

// Disconnected graphs are bipartite iff every component is.
BipartiteResult is_bipartite(const Graph& g);

std::optional<std::size_t> shortest_odd_cycle_length(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;  // new id -> old id
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
InducedSubgraph induced_ball(const Graph& g, Vertex center, std::size_t radius);

// BFS distances from source; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Text format: "n m", then m lines "u v" (u < v, sorted), optional '#' comments.
void write_graph(std::ostream& os, const Graph& g);
void write_oriented_graph(std::ostream& os, const OrientedGraph& og);

struct ParsedGraph {
  Graph graph;
  std::optional<std::vector<bool>> flips;          // present if a third column was given
  std::optional<std::vector<std::vector<Vertex>>> faces;  // "faces F" section
};

// Throws InputError on malformed text.
ParsedGraph read_graph(std::istream& is);
ParsedGraph read_graph_file(const std::string& path);

}  // namespace lgl
