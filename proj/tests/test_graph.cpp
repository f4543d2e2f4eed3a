#include <doctest.h>

#include <sstream>

#include "lgl/errors.hpp"
#include "lgl/generators.hpp"
#include "lgl/graph.hpp"
#include "lgl/lattice.hpp"
#include "oracles.hpp"

using namespace lgl;

TEST_CASE("construction rejects loops, duplicates and bad ids") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
  Graph g(3, {{2, 0}, {1, 2}});
  CHECK(g.edge(0) == Edge{2, 0});
  CHECK(g.edge_between(0, 2) == EdgeId{0});
  CHECK(!g.edge_between(0, 1));
}

TEST_CASE("degree") {
  CHECK(degree(complete_graph(4), 2) == 3);
  CHECK(degree(path_graph(3), 1) == 2);
  auto c60 = c60_graph();
  for (Vertex v = 0; v < 60; ++v) CHECK(degree(c60, v) == 3);
  CHECK_THROWS_AS(degree(complete_graph(4), 4), InputError);
}

TEST_CASE("is_bipartite") {
  const auto hexagon = cycle_graph(6);
  auto c6 = is_bipartite(hexagon);
  CHECK(c6.bipartite);
  REQUIRE(c6.coloring);
  for (const auto& e : hexagon.edges()) CHECK((*c6.coloring)[e.u] != (*c6.coloring)[e.v]);
  CHECK(!is_bipartite(cycle_graph(7)).bipartite);
  auto t5 = tessellation_ball(5, 2).graph;
  CHECK(!is_bipartite(t5).bipartite);
  CHECK(oracle::signless_nullity(t5) == 0);
}

TEST_CASE("shortest_odd_cycle_length") {
  CHECK(shortest_odd_cycle_length(cycle_graph(7)) == std::size_t{7});
  CHECK(!shortest_odd_cycle_length(cycle_graph(6)));
  auto hpg = euclidean_lattice(LatticeFamily::heptagon_pentagon_graphene, 3, 3, Boundary::torus).graph;
  CHECK(shortest_odd_cycle_length(hpg) == std::size_t{5});
}

TEST_CASE("induced_ball") {
  auto k4 = complete_graph(4);
  auto b0 = induced_ball(k4, 2, 0);
  CHECK(b0.graph.num_vertices() == 1);
  CHECK(b0.graph.num_edges() == 0);
  CHECK(b0.to_original[0] == 2);
  auto c6 = induced_ball(cycle_graph(6), 0, 2);
  CHECK(c6.graph.num_vertices() == 5);
  CHECK(c6.graph.num_edges() == 4);
  CHECK(is_connected(c6.graph));
  for (std::size_t t = 0; t <= 6; ++t) {
    auto tree = tree_ball(8);
    CHECK(induced_ball(tree, 0, t).graph.num_vertices() == 3 * (std::size_t{1} << t) - 2);
  }
}

TEST_CASE("connected_components") {
  CHECK(connected_components(complete_graph(4)).size() == 1);
  CHECK(connected_components(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})).size() == 2);
  CHECK(connected_components(Graph()).empty());
}

TEST_CASE("random graph properties") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 50;
    auto g = oracle::random_connected_graph(rng, n, 0.08);
    std::size_t sum = 0;
    for (Vertex v = 0; v < n; ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.num_edges());
    CHECK(is_bipartite(g).bipartite == !shortest_odd_cycle_length(g).has_value());
    CHECK(is_bipartite(g).bipartite == (oracle::signless_nullity(g) == 1));
    auto d = bfs_distances(g, 0);
    CHECK(d == oracle::distances(g, 0));
    std::size_t diameter = *std::max_element(d.begin(), d.end());
    CHECK(induced_ball(g, 0, diameter).graph.num_vertices() == n);
  }
}

TEST_CASE("odd cycle length matches an exhaustive search") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = oracle::random_connected_graph(rng, 4 + rng() % 9, 0.15);
    // A closed walk of odd length L exists iff trace(A^L) > 0; the shortest is a cycle.
    Eigen::MatrixXd a = oracle::adjacency(g).cast<double>();
    Eigen::MatrixXd p = a;
    std::optional<std::size_t> expect;
    for (std::size_t len = 1; len <= g.num_vertices(); ++len) {
      if (len % 2 == 1 && p.trace() > 0.5) {
        expect = len;
        break;
      }
      p = p * a;
    }
    CHECK(shortest_odd_cycle_length(g) == expect);
  }
}

TEST_CASE("text format round trip") {
  Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
  std::ostringstream os;
  write_graph(os, g);
  CHECK(os.str() == "4 3\n0 1\n0 2\n1 3\n");
  std::istringstream is(os.str() + "# trailing comment\n");
  auto parsed = read_graph(is);
  CHECK(parsed.graph == g.canonical());
  CHECK(!parsed.flips);

  OrientedGraph og(Graph(3, {{0, 1}, {1, 2}}), {false, true});
  std::ostringstream oos;
  write_oriented_graph(oos, og);
  CHECK(oos.str() == "3 2\n0 1 0\n1 2 1\n");
  std::istringstream ois(oos.str());
  auto op = read_graph(ois);
  REQUIRE(op.flips);
  CHECK(*op.flips == std::vector<bool>{false, true});

  std::istringstream bad("3 2\n0 1\n");
  CHECK_THROWS_AS(read_graph(bad), InputError);
  std::istringstream garbage("x y\n");
  CHECK_THROWS_AS(read_graph(garbage), InputError);
}

TEST_CASE("orientation heads and feet") {
  auto og = OrientedGraph::with_default_orientation(Graph(3, {{2, 0}, {1, 2}}));
  CHECK(og.foot(0) == 0);
  CHECK(og.head(0) == 2);
  CHECK(og.foot(1) == 1);
}
