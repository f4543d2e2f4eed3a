#include "lgl/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "lgl/errors.hpp"

namespace lgl {

Vec2 PeriodicLattice::cartesian(const Vec2& f) const {
  return {f[0] * a1[0] + f[1] * a2[0], f[0] * a1[1] + f[1] * a2[1]};
}

Vec2 PeriodicLattice::site_position(std::size_t i, int n1, int n2) const {
  return cartesian({sites.at(i)[0] + n1, sites.at(i)[1] + n2});
}

std::vector<std::size_t> PeriodicLattice::site_degrees() const {
  std::vector<std::size_t> deg(sites.size(), 0);
  for (const auto& h : hoppings) {
    ++deg.at(h.i);
    ++deg.at(h.j);
  }
  return deg;
}

std::optional<std::size_t> PeriodicLattice::regular_degree() const {
  auto deg = site_degrees();
  if (deg.empty()) return std::nullopt;
  for (auto d : deg)
    if (d != deg[0]) return std::nullopt;
  return deg[0];
}

namespace {

const std::vector<std::pair<LatticeFamily, const char*>>& family_table() {
  static const std::vector<std::pair<LatticeFamily, const char*>> table = {
      {LatticeFamily::graphene, "graphene"},
      {LatticeFamily::square, "square"},
      {LatticeFamily::kagome, "kagome"},
      {LatticeFamily::heptagon_pentagon_graphene, "heptagon_pentagon_graphene"},
      {LatticeFamily::heptagon_pentagon_kagome, "heptagon_pentagon_kagome"},
      {LatticeFamily::octagon_square, "octagon_square"},
      {LatticeFamily::octagon_square_kagome, "octagon_square_kagome"},
      {LatticeFamily::lieb, "lieb"},
      {LatticeFamily::hoffman_graphene, "hoffman_graphene"},
      {LatticeFamily::subdivided_hoffman_graphene, "subdivided_hoffman_graphene"},
  };
  return table;
}

PeriodicLattice square_lattice() {
  PeriodicLattice pl;
  pl.name = "square";
  pl.sites = {{0.0, 0.0}};
  pl.hoppings = {{0, 0, 1, 0}, {0, 0, 0, 1}};
  return pl;
}

PeriodicLattice graphene_lattice() {
  PeriodicLattice pl;
  pl.name = "graphene";
  pl.a1 = {1.0, 0.0};
  pl.a2 = {0.5, std::sqrt(3.0) / 2.0};
  pl.sites = {{1.0 / 3.0, 1.0 / 3.0}, {2.0 / 3.0, 2.0 / 3.0}};
  pl.hoppings = {{0, 1, 0, 0}, {0, 1, -1, 0}, {0, 1, 0, -1}};
  pl.hexagonal = true;
  return pl;
}

// Truncated square tiling: a 45-degree square around each cell centre, sites E, N, W, S.
PeriodicLattice octagon_square_lattice() {
  PeriodicLattice pl;
  pl.name = "octagon_square";
  const double side = 1.0 / (1.0 + std::sqrt(2.0));
  const double d = side / std::sqrt(2.0);
  pl.sites = {{0.5 + d, 0.5}, {0.5, 0.5 + d}, {0.5 - d, 0.5}, {0.5, 0.5 - d}};
  pl.hoppings = {{0, 1, 0, 0}, {1, 2, 0, 0}, {2, 3, 0, 0}, {3, 0, 0, 0}, {0, 2, 1, 0}, {1, 3, 0, 1}};
  return pl;
}

double cross2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

Vec2 to_fractional(const PeriodicLattice& pl, const Vec2& c) {
  const double det = cross2(pl.a1, pl.a2);
  return {cross2(c, pl.a2) / det, cross2(pl.a1, c) / det};
}

struct Neighbor {
  std::size_t hop;
  std::size_t site;
  int n1, n2;  // cell of the neighbor, relative to the site's own cell
};

std::vector<Neighbor> neighbors_of(const PeriodicLattice& pl, std::size_t s) {
  std::vector<Neighbor> out;
  for (std::size_t h = 0; h < pl.hoppings.size(); ++h) {
    const auto& hp = pl.hoppings[h];
    if (hp.i == s) out.push_back({h, hp.j, hp.n1, hp.n2});
    if (hp.j == s) out.push_back({h, hp.i, -hp.n1, -hp.n2});
  }
  return out;
}

// Rotate the bond p-q (p and q in the same cell) by 90 degrees about its midpoint.
PeriodicLattice stone_wales(PeriodicLattice pl, std::size_t p, std::size_t q) {
  const Vec2 P = pl.site_position(p), Q = pl.site_position(q);
  const Vec2 d{Q[0] - P[0], Q[1] - P[1]};
  auto side_of = [&](const Vec2& x) { return cross2(d, {x[0] - P[0], x[1] - P[1]}) > 0 ? 1 : -1; };

  std::optional<Neighbor> a, b, c, dd;
  for (const auto& nb : neighbors_of(pl, p)) {
    if (nb.site == q && nb.n1 == 0 && nb.n2 == 0) continue;
    (side_of(pl.site_position(nb.site, nb.n1, nb.n2)) > 0 ? a : b) = nb;
  }
  for (const auto& nb : neighbors_of(pl, q)) {
    if (nb.site == p && nb.n1 == 0 && nb.n2 == 0) continue;
    (side_of(pl.site_position(nb.site, nb.n1, nb.n2)) > 0 ? c : dd) = nb;
  }
  if (!a || !b || !c || !dd) throw InputError("stone_wales: bond does not have two neighbors per side");

  std::vector<Hopping> hops;
  for (std::size_t h = 0; h < pl.hoppings.size(); ++h)
    if (h != b->hop && h != c->hop) hops.push_back(pl.hoppings[h]);
  hops.push_back({p, c->site, c->n1, c->n2});
  hops.push_back({q, b->site, b->n1, b->n2});
  pl.hoppings = std::move(hops);

  const Vec2 mid{(P[0] + Q[0]) / 2, (P[1] + Q[1]) / 2};
  const Vec2 perp{-d[1] / 2, d[0] / 2};  // points to the positive side
  pl.sites[p] = to_fractional(pl, {mid[0] + perp[0], mid[1] + perp[1]});
  pl.sites[q] = to_fractional(pl, {mid[0] - perp[0], mid[1] - perp[1]});
  return pl;
}

PeriodicLattice heptagon_pentagon_graphene() {
  auto pl = stone_wales(supercell(graphene_lattice(), 2, 2), 0, 1);
  pl.name = "heptagon_pentagon_graphene";
  return pl;
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

LatticeFamily parse_family(const std::string& name) {
  for (const auto& [f, n] : family_table())
    if (name == n) return f;
  throw InputError("unknown lattice family '" + name + "'");
}

std::string family_name(LatticeFamily f) {
  for (const auto& [g, n] : family_table())
    if (g == f) return n;
  return "unknown";
}

std::vector<LatticeFamily> all_families() {
  std::vector<LatticeFamily> out;
  for (const auto& entry : family_table()) out.push_back(entry.first);
  return out;
}

PeriodicLattice make_lattice(LatticeFamily family) {
  PeriodicLattice pl;
  switch (family) {
    case LatticeFamily::graphene: return graphene_lattice();
    case LatticeFamily::square: return square_lattice();
    case LatticeFamily::kagome: pl = medial_lattice(graphene_lattice()); break;
    case LatticeFamily::heptagon_pentagon_graphene: return heptagon_pentagon_graphene();
    case LatticeFamily::heptagon_pentagon_kagome: pl = medial_lattice(heptagon_pentagon_graphene()); break;
    case LatticeFamily::octagon_square: return octagon_square_lattice();
    case LatticeFamily::octagon_square_kagome: pl = medial_lattice(octagon_square_lattice()); break;
    case LatticeFamily::lieb: pl = subdivide_lattice(square_lattice()); break;
    case LatticeFamily::hoffman_graphene: pl = medial_lattice(subdivide_lattice(graphene_lattice())); break;
    case LatticeFamily::subdivided_hoffman_graphene:
      pl = subdivide_lattice(medial_lattice(subdivide_lattice(graphene_lattice())));
      break;
  }
  pl.name = family_name(family);
  return pl;
}

PeriodicLattice medial_lattice(const PeriodicLattice& layout, Flavor flavor) {
  struct HalfEdge {
    std::size_t hop;
    int t1, t2;  // translation of the hopping that touches the site in cell (0,0)
    bool head;
  };
  std::vector<std::vector<HalfEdge>> at(layout.num_sites());
  for (std::size_t h = 0; h < layout.hoppings.size(); ++h) {
    const auto& hp = layout.hoppings[h];
    at.at(hp.i).push_back({h, 0, 0, false});
    at.at(hp.j).push_back({h, -hp.n1, -hp.n2, true});
  }

  PeriodicLattice out;
  out.name = layout.name + "_medial";
  out.a1 = layout.a1;
  out.a2 = layout.a2;
  out.hexagonal = layout.hexagonal;
  for (const auto& hp : layout.hoppings) {
    const auto& pi = layout.sites[hp.i];
    const auto& pj = layout.sites[hp.j];
    out.sites.push_back({(pi[0] + pj[0] + hp.n1) / 2, (pi[1] + pj[1] + hp.n2) / 2});
  }

  std::set<std::tuple<std::size_t, std::size_t, int, int>> seen;
  for (const auto& list : at) {
    for (std::size_t x = 0; x < list.size(); ++x) {
      for (std::size_t y = x + 1; y < list.size(); ++y) {
        Hopping nh{list[x].hop, list[y].hop, list[y].t1 - list[x].t1, list[y].t2 - list[x].t2, 1.0};
        if (flavor == Flavor::a) nh.value = list[x].head == list[y].head ? 1.0 : -1.0;
        if (nh.i > nh.j || (nh.i == nh.j && std::make_pair(nh.n1, nh.n2) < std::make_pair(0, 0))) {
          std::swap(nh.i, nh.j);
          nh.n1 = -nh.n1;
          nh.n2 = -nh.n2;
        }
        if (!seen.insert({nh.i, nh.j, nh.n1, nh.n2}).second)
          throw InputError("medial_lattice: layout has parallel bonds");
        out.hoppings.push_back(nh);
      }
    }
  }
  return out;
}

PeriodicLattice subdivide_lattice(const PeriodicLattice& layout) {
  PeriodicLattice out;
  out.name = layout.name + "_subdivided";
  out.a1 = layout.a1;
  out.a2 = layout.a2;
  out.hexagonal = layout.hexagonal;
  out.sites = layout.sites;
  const std::size_t J = layout.num_sites();
  for (std::size_t h = 0; h < layout.hoppings.size(); ++h) {
    const auto& hp = layout.hoppings[h];
    const auto& pi = layout.sites[hp.i];
    const auto& pj = layout.sites[hp.j];
    out.sites.push_back({(pi[0] + pj[0] + hp.n1) / 2, (pi[1] + pj[1] + hp.n2) / 2});
    out.hoppings.push_back({hp.i, J + h, 0, 0, 1.0});
    out.hoppings.push_back({J + h, hp.j, hp.n1, hp.n2, 1.0});
  }
  return out;
}

PeriodicLattice supercell(const PeriodicLattice& pl, int s1, int s2) {
  if (s1 < 1 || s2 < 1) throw InputError("supercell factors must be positive");
  PeriodicLattice out;
  out.name = pl.name + "_supercell";
  out.a1 = {pl.a1[0] * s1, pl.a1[1] * s1};
  out.a2 = {pl.a2[0] * s2, pl.a2[1] * s2};
  out.hexagonal = pl.hexagonal && s1 == s2;
  const std::size_t J = pl.num_sites();
  auto index = [&](int x, int y, std::size_t i) { return (static_cast<std::size_t>(x) * s2 + y) * J + i; };
  out.sites.resize(J * s1 * s2);
  for (int x = 0; x < s1; ++x)
    for (int y = 0; y < s2; ++y)
      for (std::size_t i = 0; i < J; ++i)
        out.sites[index(x, y, i)] = {(pl.sites[i][0] + x) / s1, (pl.sites[i][1] + y) / s2};
  for (int x = 0; x < s1; ++x)
    for (int y = 0; y < s2; ++y)
      for (const auto& h : pl.hoppings) {
        const int tx = x + h.n1, ty = y + h.n2;
        const int c1 = floor_div(tx, s1), c2 = floor_div(ty, s2);
        out.hoppings.push_back({index(x, y, h.i), index(tx - c1 * s1, ty - c2 * s2, h.j), c1, c2, h.value});
      }
  return out;
}

Graph torus_graph(const PeriodicLattice& pl, std::size_t N1, std::size_t N2) {
  if (N1 < 3 || N2 < 3) throw InputError("torus needs at least 3 cells per direction");
  const std::size_t J = pl.num_sites();
  std::vector<Edge> edges;
  edges.reserve(N1 * N2 * pl.hoppings.size());
  const auto n1 = static_cast<long>(N1), n2 = static_cast<long>(N2);
  for (std::size_t x = 0; x < N1; ++x)
    for (std::size_t y = 0; y < N2; ++y)
      for (const auto& h : pl.hoppings) {
        auto tx = static_cast<std::size_t>(((static_cast<long>(x) + h.n1) % n1 + n1) % n1);
        auto ty = static_cast<std::size_t>(((static_cast<long>(y) + h.n2) % n2 + n2) % n2);
        edges.push_back({cell_vertex(J, N2, x, y, h.i), cell_vertex(J, N2, tx, ty, h.j)});
      }
  return Graph(N1 * N2 * J, std::move(edges));
}

Graph open_graph(const PeriodicLattice& pl, std::size_t N1, std::size_t N2) {
  if (N1 < 1 || N2 < 1) throw InputError("lattice size must be at least 1");
  const std::size_t J = pl.num_sites();
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < N1; ++x)
    for (std::size_t y = 0; y < N2; ++y)
      for (const auto& h : pl.hoppings) {
        const long tx = static_cast<long>(x) + h.n1, ty = static_cast<long>(y) + h.n2;
        if (tx < 0 || ty < 0 || tx >= static_cast<long>(N1) || ty >= static_cast<long>(N2)) continue;
        edges.push_back({cell_vertex(J, N2, x, y, h.i),
                         cell_vertex(J, N2, static_cast<std::size_t>(tx), static_cast<std::size_t>(ty), h.j)});
      }
  return Graph(N1 * N2 * J, std::move(edges));
}

EuclideanPatch euclidean_lattice(LatticeFamily family, std::size_t N1, std::size_t N2, Boundary boundary) {
  auto pl = make_lattice(family);
  EuclideanPatch out;
  out.graph = boundary == Boundary::torus ? torus_graph(pl, N1, N2) : open_graph(pl, N1, N2);
  const std::size_t J = pl.num_sites();
  out.positions.resize(N1 * N2 * J);
  for (std::size_t x = 0; x < N1; ++x)
    for (std::size_t y = 0; y < N2; ++y)
      for (std::size_t i = 0; i < J; ++i)
        out.positions[cell_vertex(J, N2, x, y, i)] =
            pl.site_position(i, static_cast<int>(x), static_cast<int>(y));
  if (boundary == Boundary::torus) out.lattice = std::move(pl);
  return out;
}

std::vector<PeriodicFace> trace_periodic_faces(const PeriodicLattice& pl) {
  // Dart 2h runs i -> (j, n) along hopping h, dart 2h+1 runs back.
  struct Dart {
    std::size_t from, to;
    int n1, n2;
  };
  std::vector<Dart> darts;
  for (const auto& h : pl.hoppings) {
    darts.push_back({h.i, h.j, h.n1, h.n2});
    darts.push_back({h.j, h.i, -h.n1, -h.n2});
  }
  std::vector<std::vector<std::size_t>> rot(pl.num_sites());
  for (std::size_t s = 0; s < pl.num_sites(); ++s) {
    std::vector<std::pair<double, std::size_t>> by_angle;
    const Vec2 origin = pl.site_position(s);
    for (std::size_t d = 0; d < darts.size(); ++d) {
      if (darts[d].from != s) continue;
      const Vec2 t = pl.site_position(darts[d].to, darts[d].n1, darts[d].n2);
      by_angle.push_back({std::atan2(t[1] - origin[1], t[0] - origin[0]), d});
    }
    std::sort(by_angle.begin(), by_angle.end());
    for (const auto& entry : by_angle) rot[s].push_back(entry.second);
  }

  std::vector<bool> used(darts.size(), false);
  std::vector<PeriodicFace> faces;
  for (std::size_t start = 0; start < darts.size(); ++start) {
    if (used[start]) continue;
    PeriodicFace face;
    std::array<int, 2> cell{0, 0};
    std::size_t d = start;
    while (!used[d]) {
      used[d] = true;
      face.corners.push_back({darts[d].from, cell});
      cell[0] += darts[d].n1;
      cell[1] += darts[d].n2;
      const auto& rb = rot[darts[d].to];
      auto pos = static_cast<std::size_t>(std::find(rb.begin(), rb.end(), d ^ 1U) - rb.begin());
      d = rb[(pos + rb.size() - 1) % rb.size()];
    }
    if (cell[0] != 0 || cell[1] != 0) throw NumericError("face tracing: embedding is not planar");
    faces.push_back(std::move(face));
  }
  return faces;
}

std::map<std::size_t, std::size_t> face_census(const PeriodicLattice& pl) {
  std::map<std::size_t, std::size_t> census;
  for (const auto& f : trace_periodic_faces(pl)) ++census[f.size()];
  return census;
}

std::vector<std::vector<Vertex>> torus_faces(const PeriodicLattice& pl, std::size_t N1, std::size_t N2) {
  const std::size_t J = pl.num_sites();
  const auto n1 = static_cast<int>(N1), n2 = static_cast<int>(N2);
  std::vector<std::vector<Vertex>> out;
  for (const auto& f : trace_periodic_faces(pl))
    for (int x = 0; x < n1; ++x)
      for (int y = 0; y < n2; ++y) {
        std::vector<Vertex> cyc;
        for (const auto& [site, off] : f.corners) {
          auto cx = static_cast<std::size_t>(((x + off[0]) % n1 + n1) % n1);
          auto cy = static_cast<std::size_t>(((y + off[1]) % n2 + n2) % n2);
          cyc.push_back(cell_vertex(J, N2, cx, cy, site));
        }
        out.push_back(std::move(cyc));
      }
  return out;
}

}  // namespace lgl
