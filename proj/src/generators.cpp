#include "lgl/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "lgl/errors.hpp"

namespace lgl {

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph(10, std::move(edges));
}

LineGraph line_graph(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) edges.push_back({inc[i].edge, inc[j].edge});
  }
  std::vector<Vertex> map(g.num_edges());
  std::iota(map.begin(), map.end(), Vertex{0});
  return {Graph(g.num_edges(), std::move(edges)), std::move(map)};
}

Subdivision subdivision_graph(const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  std::vector<Edge> edges;
  edges.reserve(2 * g.num_edges());
  std::vector<Vertex> mids(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    mids[e] = n + e;
    edges.push_back({g.edge(e).u, n + e});
    edges.push_back({g.edge(e).v, n + e});
  }
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), Vertex{0});
  return {Graph(n + g.num_edges(), std::move(edges)), std::move(ids), std::move(mids)};
}

Graph hoffman_layout(const Graph& z) {
  if (z.regular_degree() != 3) throw InputError("hoffman_layout needs a 3-regular graph");
  return line_graph(subdivision_graph(z).graph).graph;
}

TessellationBall tessellation_ball(std::size_t k, std::size_t r) {
  if (k < 3) throw InputError("tessellation_ball needs k >= 3");
  TessellationBall out;
  out.k = k;
  out.r = r;

  std::vector<Edge> edges;
  std::vector<int> deg;
  auto new_vertex = [&] {
    deg.push_back(0);
    return static_cast<Vertex>(deg.size() - 1);
  };
  auto add_edge = [&](Vertex a, Vertex b) {
    edges.push_back({a, b});
    ++deg[a];
    ++deg[b];
  };

  std::vector<Vertex> boundary;
  for (std::size_t i = 0; i < k; ++i) boundary.push_back(new_vertex());
  for (std::size_t i = 0; i < k; ++i) add_edge(boundary[i], boundary[(i + 1) % k]);
  out.faces.push_back(boundary);
  out.shell_of_face.push_back(0);

  // Tetrahedron: the three spokes of the first shell meet in one vertex.
  if (k == 3 && r >= 1) {
    Vertex apex = new_vertex();
    for (Vertex v = 0; v < 3; ++v) add_edge(v, apex);
    for (Vertex v = 0; v < 3; ++v) {
      out.faces.push_back({v, static_cast<Vertex>((v + 1) % 3), apex});
      out.shell_of_face.push_back(1);
    }
    boundary.clear();
    out.closed = true;
  }

  for (std::size_t shell = 1; shell <= r && !out.closed; ++shell) {
    std::vector<std::size_t> breaks;
    for (std::size_t i = 0; i < boundary.size(); ++i)
      if (deg[boundary[i]] == 2) breaks.push_back(i);

    if (breaks.empty()) {
      if (boundary.size() != k) throw NumericError("tessellation boundary cannot be closed");
      out.faces.push_back(boundary);
      out.shell_of_face.push_back(shell);
      boundary.clear();
      out.closed = true;
      break;
    }
    if (breaks.size() < 2) throw NumericError("tessellation boundary has a single free vertex");

    const std::size_t len = boundary.size();
    std::vector<Vertex> spoke(breaks.size());
    for (std::size_t t = 0; t < breaks.size(); ++t) {
      spoke[t] = new_vertex();
      add_edge(boundary[breaks[t]], spoke[t]);
    }

    std::vector<Vertex> next_boundary;
    for (std::size_t t = 0; t < breaks.size(); ++t) {
      const std::size_t t1 = (t + 1) % breaks.size();
      const std::size_t run = (breaks[t1] + len - breaks[t]) % len;
      if (k < run + 3) throw NumericError("tessellation run too long for k");
      const std::size_t interior = k - run - 3;

      std::vector<Vertex> path{spoke[t]};
      for (std::size_t i = 0; i < interior; ++i) path.push_back(new_vertex());
      path.push_back(spoke[t1]);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) add_edge(path[i], path[i + 1]);

      std::vector<Vertex> face;
      for (std::size_t i = 0; i <= run; ++i) face.push_back(boundary[(breaks[t] + i) % len]);
      for (auto it = path.rbegin(); it != path.rend(); ++it) face.push_back(*it);
      out.faces.push_back(std::move(face));
      out.shell_of_face.push_back(shell);

      next_boundary.insert(next_boundary.end(), path.begin(), path.end() - 1);
    }
    boundary = std::move(next_boundary);
  }

  out.graph = Graph(deg.size(), std::move(edges));
  out.boundary_vertices = std::move(boundary);
  return out;
}

Graph tree_ball(std::size_t r) {
  std::vector<Edge> edges;
  std::vector<Vertex> layer{0};
  Vertex next = 1;
  for (std::size_t depth = 0; depth < r; ++depth) {
    std::vector<Vertex> grown;
    for (Vertex v : layer) {
      const int children = depth == 0 ? 3 : 2;
      for (int c = 0; c < children; ++c) {
        edges.push_back({v, next});
        grown.push_back(next++);
      }
    }
    layer = std::move(grown);
  }
  return Graph(next, std::move(edges));
}

std::vector<std::array<double, 3>> c60_coordinates() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::array<double, 3>> ico;
  for (double a : {-1.0, 1.0})
    for (double b : {-phi, phi}) {
      ico.push_back({0.0, a, b});
      ico.push_back({a, b, 0.0});
      ico.push_back({b, 0.0, a});
    }
  auto dist2 = [](const std::array<double, 3>& p, const std::array<double, 3>& q) {
    double s = 0;
    for (int i = 0; i < 3; ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
    return s;
  };
  std::vector<std::array<double, 3>> pts;
  for (std::size_t i = 0; i < ico.size(); ++i)
    for (std::size_t j = i + 1; j < ico.size(); ++j) {
      if (std::abs(dist2(ico[i], ico[j]) - 4.0) > 1e-9) continue;
      for (double t : {1.0 / 3.0, 2.0 / 3.0}) {
        std::array<double, 3> p;
        for (int c = 0; c < 3; ++c) p[c] = ico[i][c] + t * (ico[j][c] - ico[i][c]);
        pts.push_back(p);
      }
    }
  // Snap before sorting so the order does not depend on rounding noise.
  for (auto& p : pts)
    for (double& x : p) x = std::round(x * 1e9) / 1e9;
  std::sort(pts.begin(), pts.end());
  return pts;
}

Graph c60_graph() {
  auto pts = c60_coordinates();
  std::vector<Edge> edges;
  const double target = 4.0 / 9.0;  // squared edge length
  for (Vertex i = 0; i < pts.size(); ++i)
    for (Vertex j = i + 1; j < pts.size(); ++j) {
      double s = 0;
      for (int c = 0; c < 3; ++c) s += (pts[i][c] - pts[j][c]) * (pts[i][c] - pts[j][c]);
      if (std::abs(s - target) < 1e-6) edges.push_back({i, j});
    }
  return Graph(pts.size(), std::move(edges));
}

namespace {

std::vector<std::vector<Vertex>> trace_rotation_system(const Graph& g,
                                                       const std::vector<std::vector<Vertex>>& rot) {
  std::map<std::pair<Vertex, Vertex>, bool> used;
  std::vector<std::vector<Vertex>> faces;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex w : rot[v]) {
      if (used[{v, w}]) continue;
      std::vector<Vertex> face;
      Vertex a = v, b = w;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        face.push_back(a);
        const auto& rb = rot[b];
        auto pos = static_cast<std::size_t>(std::find(rb.begin(), rb.end(), a) - rb.begin());
        Vertex c = rb[(pos + rb.size() - 1) % rb.size()];
        a = b;
        b = c;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

}  // namespace

std::vector<std::vector<Vertex>> trace_spherical_faces(const Graph& g,
                                                       const std::vector<std::array<double, 3>>& pos) {
  if (pos.size() != g.num_vertices()) throw InputError("one position per vertex required");
  std::vector<std::vector<Vertex>> rot(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto& n = pos[v];
    // Any vector not parallel to n gives a tangent frame.
    std::array<double, 3> ref = std::abs(n[0]) < 0.9 ? std::array<double, 3>{1, 0, 0}
                                                      : std::array<double, 3>{0, 1, 0};
    auto cross = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
      return std::array<double, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                   a[0] * b[1] - a[1] * b[0]};
    };
    auto e1 = cross(n, ref);
    auto e2 = cross(n, e1);
    std::vector<std::pair<double, Vertex>> by_angle;
    for (const auto& inc : g.incident(v)) {
      const auto& q = pos[inc.neighbor];
      double d[3] = {q[0] - n[0], q[1] - n[1], q[2] - n[2]};
      double x = d[0] * e1[0] + d[1] * e1[1] + d[2] * e1[2];
      double y = d[0] * e2[0] + d[1] * e2[1] + d[2] * e2[2];
      by_angle.push_back({std::atan2(y, x), inc.neighbor});
    }
    std::sort(by_angle.begin(), by_angle.end());
    for (const auto& [angle, w] : by_angle) rot[v].push_back(w);
  }
  return trace_rotation_system(g, rot);
}

}  // namespace lgl
