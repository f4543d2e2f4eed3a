#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgl/graph.hpp"

namespace lgl {

using Vec2 = std::array<double, 2>;

// Bond from site i in cell (0,0) to site j in cell (n1,n2). value is the matrix
// element of H (1 for a plain layout bond, since t = -1).
struct Hopping {
  std::size_t i = 0;
  std::size_t j = 0;
  int n1 = 0;
  int n2 = 0;
  double value = 1.0;
};

struct PeriodicLattice {
  std::string name;
  Vec2 a1{1.0, 0.0};
  Vec2 a2{0.0, 1.0};
  std::vector<Vec2> sites;  // fractional coordinates
  std::vector<Hopping> hoppings;
  bool hexagonal = false;  // selects the default high-symmetry path

  std::size_t num_sites() const { return sites.size(); }
  Vec2 cartesian(const Vec2& frac) const;
  Vec2 site_position(std::size_t i, int n1 = 0, int n2 = 0) const;
  // Coordination of each site counting both directions of every hopping.
  std::vector<std::size_t> site_degrees() const;
  std::optional<std::size_t> regular_degree() const;
};

enum class LatticeFamily {
  graphene,
  square,
  kagome,
  heptagon_pentagon_graphene,
  heptagon_pentagon_kagome,
  octagon_square,
  octagon_square_kagome,
  lieb,
  hoffman_graphene,             // L(S(graphene))
  subdivided_hoffman_graphene,  // S(L(S(graphene)))
};

LatticeFamily parse_family(const std::string& name);
std::string family_name(LatticeFamily f);
std::vector<LatticeFamily> all_families();

PeriodicLattice make_lattice(LatticeFamily family);

// Line lattice: one site per hopping, bonds between hoppings sharing an endpoint.
// Flavor a orients hopping (i, j, n) from site i in its own cell to site j in cell n
// and weights each bond +1 for head-head or foot-foot, -1 otherwise.
PeriodicLattice medial_lattice(const PeriodicLattice& layout, Flavor flavor = Flavor::s);
PeriodicLattice subdivide_lattice(const PeriodicLattice& layout);
PeriodicLattice supercell(const PeriodicLattice& pl, int s1, int s2);

// Vertex id of site i in cell (x, y).
inline Vertex cell_vertex(std::size_t J, std::size_t N2, std::size_t x, std::size_t y, std::size_t i) {
  return static_cast<Vertex>((x * N2 + y) * J + i);
}

// Periodic quotient on N1 x N2 cells. Requires N1, N2 >= 3.
Graph torus_graph(const PeriodicLattice& pl, std::size_t N1, std::size_t N2);
// Hard-wall truncation: bonds leaving the N1 x N2 block are dropped.
Graph open_graph(const PeriodicLattice& pl, std::size_t N1, std::size_t N2);

enum class Boundary { open, torus };

struct EuclideanPatch {
  Graph graph;
  std::vector<Vec2> positions;            // Cartesian, one per vertex
  std::optional<PeriodicLattice> lattice;  // present for the torus
};

EuclideanPatch euclidean_lattice(LatticeFamily family, std::size_t N1, std::size_t N2, Boundary boundary);

// A face of the periodic embedding: corners as (site, cell offset).
struct PeriodicFace {
  std::vector<std::pair<std::size_t, std::array<int, 2>>> corners;
  std::size_t size() const { return corners.size(); }
};

// Faces of one unit cell, traced from the angular order of bonds at each site.
std::vector<PeriodicFace> trace_periodic_faces(const PeriodicLattice& pl);
std::map<std::size_t, std::size_t> face_census(const PeriodicLattice& pl);
// Every face of the torus quotient as a vertex cycle of torus_graph(pl, N1, N2).
std::vector<std::vector<Vertex>> torus_faces(const PeriodicLattice& pl, std::size_t N1, std::size_t N2);

}  // namespace lgl
