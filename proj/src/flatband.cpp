#include "lgl/flatband.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <ostream>
#include <set>

#include "lgl/errors.hpp"

namespace lgl {

namespace {

constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();

// BFS distances from s inside the subgraph of vertices >= s.
std::vector<std::size_t> restricted_distances(const Graph& g, Vertex s) {
  std::vector<std::size_t> dist(g.num_vertices(), kFar);
  std::deque<Vertex> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(x)) {
      if (inc.neighbor < s || dist[inc.neighbor] != kFar) continue;
      dist[inc.neighbor] = dist[x] + 1;
      queue.push_back(inc.neighbor);
    }
  }
  return dist;
}

struct CycleSearch {
  const Graph& g;
  Vertex s;
  std::size_t len;
  const std::vector<std::size_t>& dist;
  std::vector<Vertex> path;
  std::vector<bool> on_path;

  bool extend(Vertex x) {
    const std::size_t used = path.size() - 1;  // edges so far
    if (used + 1 == len) return g.has_edge(x, s);
    for (const auto& inc : g.incident(x)) {
      Vertex y = inc.neighbor;
      if (y <= s || on_path[y] || dist[y] > len - used - 1) continue;
      path.push_back(y);
      on_path[y] = true;
      if (extend(y)) return true;
      on_path[y] = false;
      path.pop_back();
    }
    return false;
  }
};

bool parity_ok(Parity p, std::size_t len) {
  return p == Parity::any || (p == Parity::even) == (len % 2 == 0);
}

void check_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  if (cycle.size() < 3) throw InputError("a cycle needs at least 3 vertices");
  std::set<Vertex> seen(cycle.begin(), cycle.end());
  if (seen.size() != cycle.size()) throw InputError("cycle repeats a vertex");
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (cycle[i] >= g.num_vertices()) throw InputError("cycle vertex out of range");
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) throw InputError("cycle uses a missing edge");
  }
}

}  // namespace

std::optional<std::vector<Vertex>> find_cycle(const Graph& g, Parity parity, std::size_t max_len) {
  std::optional<std::vector<Vertex>> best;
  std::size_t best_len = max_len + 1;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (g.degree(s) < 2) continue;
    auto dist = restricted_distances(g, s);
    for (std::size_t len = 3; len < best_len; ++len) {
      if (!parity_ok(parity, len)) continue;
      CycleSearch search{g, s, len, dist, {s}, std::vector<bool>(g.num_vertices(), false)};
      search.on_path[s] = true;
      if (search.extend(s)) {
        best = std::move(search.path);
        best_len = len;
        break;
      }
    }
  }
  return best;
}

std::vector<std::int64_t> EdgeState::integer_vector() const {
  std::vector<std::int64_t> v(num_edges, 0);
  for (const auto& [e, a] : support) v.at(e) = a;
  return v;
}

std::vector<double> EdgeState::normalized() const {
  std::vector<double> v(num_edges, 0.0);
  const double norm = std::sqrt(static_cast<double>(support.size()));
  for (const auto& [e, a] : support) v.at(e) = a / norm;
  return v;
}

EdgeState compact_state_s(const Graph& g, const std::vector<Vertex>& cycle) {
  check_cycle(g, cycle);
  if (cycle.size() % 2 != 0) throw InputError("symmetric flat-band states need an even cycle");
  EdgeState st;
  st.flavor = Flavor::s;
  st.num_edges = g.num_edges();
  st.cycle = cycle;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    st.support.push_back({*g.edge_between(cycle[i], cycle[(i + 1) % cycle.size()]), i % 2 == 0 ? 1 : -1});
  return st;
}

EdgeState compact_state_a(const OrientedGraph& og, const std::vector<Vertex>& cycle) {
  const Graph& g = og.base();
  check_cycle(g, cycle);
  EdgeState st;
  st.flavor = Flavor::a;
  st.num_edges = g.num_edges();
  st.cycle = cycle;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    EdgeId e = *g.edge_between(cycle[i], cycle[(i + 1) % cycle.size()]);
    st.support.push_back({e, og.foot(e) == cycle[i] ? 1 : -1});
  }
  return st;
}

double verify_eigenstate(const SparseSymMatrix& h, const std::vector<double>& state, double energy) {
  if (state.size() != h.dim()) throw InputError("state length does not match matrix dimension");
  std::vector<double> y(h.dim());
  h.matvec(state.data(), y.data());
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) s += (y[i] - energy * state[i]) * (y[i] - energy * state[i]);
  return std::sqrt(s);
}

std::int64_t exact_residual(const SparseSymMatrix& h, const std::vector<std::int64_t>& state, std::int64_t energy) {
  auto y = h.matvec_exact(state);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const std::int64_t r = y[i] - energy * state[i];
    s += r * r;
  }
  return s;
}

std::optional<std::vector<Vertex>> merge_faces(const std::vector<Vertex>& f1, const std::vector<Vertex>& f2) {
  std::set<Vertex> s2(f2.begin(), f2.end());
  std::vector<Vertex> shared;
  for (Vertex v : f1)
    if (s2.count(v)) shared.push_back(v);
  if (shared.size() != 2) return std::nullopt;

  auto orient = [](std::vector<Vertex> f, Vertex a, Vertex b) -> std::optional<std::vector<Vertex>> {
    const std::size_t k = f.size();
    auto it = std::find(f.begin(), f.end(), a);
    std::rotate(f.begin(), it, f.end());
    if (f[1] == b) return f;
    if (f[k - 1] == b) {
      std::reverse(f.begin() + 1, f.end());
      return f;
    }
    return std::nullopt;  // shared vertices are not adjacent on this face
  };
  const Vertex a = shared[0], b = shared[1];
  auto g1 = orient(f1, a, b);
  auto g2 = orient(f2, b, a);
  if (!g1 || !g2) return std::nullopt;
  std::vector<Vertex> cycle(g1->begin() + 1, g1->end());
  cycle.insert(cycle.end(), g2->begin() + 1, g2->end());
  return cycle;
}

void write_state(std::ostream& os, const EdgeState& st) {
  os << "# flavor " << (st.flavor == Flavor::s ? 's' : 'a') << '\n';
  os << "# cycle";
  for (Vertex v : st.cycle) os << ' ' << v;
  os << '\n';
  for (const auto& [e, a] : st.support) os << e << ' ' << a << '\n';
}

}  // namespace lgl
