#include <doctest.h>

#include <sstream>

#include "lgl/errors.hpp"
#include "lgl/flatband.hpp"
#include "lgl/generators.hpp"
#include "lgl/hamiltonian.hpp"
#include "lgl/lattice.hpp"
#include "oracles.hpp"

using namespace lgl;

namespace {

std::int64_t residual_s(const Graph& g, const std::vector<Vertex>& cycle) {
  auto st = compact_state_s(g, cycle);
  return exact_residual(effective_hamiltonian(g, Flavor::s), st.integer_vector(), -2);
}

std::int64_t residual_a(const OrientedGraph& og, const std::vector<Vertex>& cycle) {
  auto st = compact_state_a(og, cycle);
  HamiltonianOptions opts;
  opts.orientation = og;
  return exact_residual(effective_hamiltonian(og.base(), Flavor::a, opts), st.integer_vector(), -2);
}

}  // namespace

TEST_CASE("find_cycle") {
  auto c6 = find_cycle(cycle_graph(6), Parity::even, 10);
  REQUIRE(c6);
  CHECK(c6->size() == 6);
  CHECK(!find_cycle(cycle_graph(6), Parity::odd, 10));
  CHECK(!find_cycle(tree_ball(4), Parity::any, 20));
  CHECK(find_cycle(complete_graph(4), Parity::any, 10)->size() == 3);
  CHECK(find_cycle(complete_graph(4), Parity::even, 10)->size() == 4);
  CHECK(!find_cycle(cycle_graph(9), Parity::any, 8));

  // Two heptagons sharing an edge bound a 12-cycle.
  auto t7 = tessellation_ball(7, 2).graph;
  auto even = find_cycle(t7, Parity::even, 14);
  REQUIRE(even);
  CHECK(even->size() == 12);
  CHECK(find_cycle(t7, Parity::any, 14)->size() == 7);
}

TEST_CASE("find_cycle length agrees with an exhaustive edge-deletion girth search") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_connected_graph(rng, 4 + rng() % 8, 0.2);
    auto c = find_cycle(g, Parity::any, g.num_vertices());
    // Girth oracle: drop each edge in turn and take the shortest detour between its ends.
    std::optional<std::size_t> girth;
    for (const auto& e : g.edges()) {
      std::vector<Edge> rest;
      for (const auto& f : g.edges())
        if (!(f == e)) rest.push_back(f);
      Graph h(g.num_vertices(), rest);
      auto d = oracle::distances(h, e.u);
      if (d[e.v] != SIZE_MAX && (!girth || d[e.v] + 1 < *girth)) girth = d[e.v] + 1;
    }
    CHECK((c ? std::optional<std::size_t>(c->size()) : std::nullopt) == girth);
    if (c)
      for (std::size_t i = 0; i < c->size(); ++i) CHECK(g.has_edge((*c)[i], (*c)[(i + 1) % c->size()]));
  }
}

TEST_CASE("compact_state_s") {
  CHECK(residual_s(cycle_graph(6), {0, 1, 2, 3, 4, 5}) == 0);
  auto sq = euclidean_lattice(LatticeFamily::square, 4, 4, Boundary::torus).graph;
  auto c4 = find_cycle(sq, Parity::even, 4);
  REQUIRE(c4);
  CHECK(residual_s(sq, *c4) == 0);
  auto t7 = tessellation_ball(7, 2).graph;
  CHECK(residual_s(t7, *find_cycle(t7, Parity::even, 14)) == 0);
  CHECK_THROWS_AS(compact_state_s(cycle_graph(7), {0, 1, 2, 3, 4, 5, 6}), InputError);
  CHECK_THROWS_AS(compact_state_s(cycle_graph(6), {0, 1, 3, 4}), InputError);

  auto st = compact_state_s(cycle_graph(6), {0, 1, 2, 3, 4, 5});
  double norm = 0.0;
  for (double x : st.normalized()) norm += x * x;
  CHECK(norm == doctest::Approx(1.0));
  CHECK(verify_eigenstate(effective_hamiltonian(cycle_graph(6), Flavor::s), st.normalized(), -2.0) < 1e-12);
}

TEST_CASE("compact_state_a for every orientation") {
  std::mt19937_64 rng(52);
  for (std::size_t n = 3; n <= 9; ++n) {
    std::vector<Vertex> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0);
    for (int trial = 0; trial < 5; ++trial)
      CHECK(residual_a(OrientedGraph(cycle_graph(n), oracle::random_flips(rng, n)), cycle) == 0);
  }
  auto hpg = euclidean_lattice(LatticeFamily::heptagon_pentagon_graphene, 3, 3, Boundary::torus).graph;
  auto pent = find_cycle(hpg, Parity::odd, 5);
  REQUIRE(pent);
  CHECK(pent->size() == 5);
  for (int trial = 0; trial < 5; ++trial)
    CHECK(residual_a(OrientedGraph(hpg, oracle::random_flips(rng, hpg.num_edges())), *pent) == 0);

  // Bipartite C6: the a-state is the s-state up to per-edge signs.
  auto og = OrientedGraph::with_default_orientation(cycle_graph(6));
  auto a = compact_state_a(og, {0, 1, 2, 3, 4, 5});
  auto s = compact_state_s(cycle_graph(6), {0, 1, 2, 3, 4, 5});
  for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(a.support[i].second) == std::abs(s.support[i].second));
}

TEST_CASE("random vector is far from an eigenvector") {
  auto h = effective_hamiltonian(cycle_graph(6), Flavor::s);
  CHECK(verify_eigenstate(h, {1, 0, 0, 0, 0, 0}, -2.0) > 0.5);
  CHECK_THROWS_AS(verify_eigenstate(h, {1, 0}, -2.0), InputError);
}

TEST_CASE("hexagon states on a torus are linearly dependent") {
  PeriodicLattice pl = make_lattice(LatticeFamily::graphene);
  auto g = torus_graph(pl, 4, 4);
  auto faces = torus_faces(pl, 4, 4);
  REQUIRE(faces.size() == 16);
  Eigen::MatrixXd states(g.num_edges(), faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    auto v = compact_state_s(g, faces[f]).integer_vector();
    for (std::size_t e = 0; e < v.size(); ++e) states(e, f) = static_cast<double>(v[e]);
  }
  // One vanishing combination: rank N^2 - 1.
  CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(states).rank() == 15);
}

TEST_CASE("merge_faces") {
  auto m = merge_faces({0, 1, 2, 3}, {1, 0, 4, 5});
  REQUIRE(m);
  CHECK(m->size() == 6);
  CHECK(!merge_faces({0, 1, 2}, {3, 4, 5}));
  CHECK(!merge_faces({0, 1, 2, 3}, {0, 2, 5, 6}));
}

TEST_CASE("write_state") {
  std::ostringstream os;
  write_state(os, compact_state_s(cycle_graph(4), {0, 1, 2, 3}));
  CHECK(os.str().rfind("# flavor s\n# cycle 0 1 2 3\n", 0) == 0);
}
