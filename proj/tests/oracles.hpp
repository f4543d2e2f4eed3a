#pragma once

// Independent reference implementations used to check the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lgl/graph.hpp"

namespace oracle {

using lgl::Edge;
using lgl::Graph;
using lgl::Vertex;

// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    Vertex a = order[i], b = order[pick(rng)];
    edges.push_back({a, b});
    seen.insert({std::min(a, b), std::max(a, b)});
  }
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!seen.count({u, v}) && coin(rng)) edges.push_back({u, v});
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(n, edges);
}

inline std::vector<std::size_t> distances(const Graph& g, Vertex s);

// Connected 3-regular simple graph by the configuration model with rejection; n even.
inline Graph random_cubic_graph(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), 3, v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      Vertex a = std::min(stubs[i], stubs[i + 1]), b = std::max(stubs[i], stubs[i + 1]);
      if (a == b || !seen.insert({a, b}).second) {
        ok = false;
        break;
      }
      edges.push_back({a, b});
    }
    if (!ok) continue;
    Graph g(n, edges);
    auto d = distances(g, 0);
    if (std::find(d.begin(), d.end(), SIZE_MAX) == d.end()) return g;
  }
}

inline std::vector<bool> random_flips(std::mt19937_64& rng, std::size_t m) {
  std::bernoulli_distribution coin(0.5);
  std::vector<bool> f(m);
  for (std::size_t i = 0; i < m; ++i) f[i] = coin(rng);
  return f;
}

inline Eigen::MatrixXi adjacency(const Graph& g) {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(g.num_vertices(), g.num_vertices());
  for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1;
  return a;
}

inline Eigen::MatrixXi degree_matrix(const Graph& g) {
  Eigen::MatrixXi d = Eigen::MatrixXi::Zero(g.num_vertices(), g.num_vertices());
  for (const auto& e : g.edges()) {
    ++d(e.u, e.u);
    ++d(e.v, e.v);
  }
  return d;
}

// M(e, v) = 1 when incident.
inline Eigen::MatrixXi incidence_s(const Graph& g) {
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(g.num_edges(), g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e) m(e, g.edge(e).u) = m(e, g.edge(e).v) = 1;
  return m;
}

// N(e, head) = 1, N(e, foot) = -1; flip[e] false puts the foot at edge(e).u.
inline Eigen::MatrixXi incidence_a(const Graph& g, const std::vector<bool>& flip) {
  Eigen::MatrixXi m = Eigen::MatrixXi::Zero(g.num_edges(), g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    Vertex foot = flip[e] ? g.edge(e).v : g.edge(e).u;
    Vertex head = flip[e] ? g.edge(e).u : g.edge(e).v;
    m(e, head) = 1;
    m(e, foot) = -1;
  }
  return m;
}

// Edge pairs sharing exactly one endpoint, checked over all pairs.
inline std::set<std::pair<Vertex, Vertex>> line_graph_pairs(const Graph& g) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (Vertex e = 0; e < g.num_edges(); ++e)
    for (Vertex f = e + 1; f < g.num_edges(); ++f) {
      const auto& a = g.edge(e);
      const auto& b = g.edge(f);
      int shared = (a.u == b.u) + (a.u == b.v) + (a.v == b.u) + (a.v == b.v);
      if (shared == 1) out.insert({e, f});
    }
  return out;
}

inline std::vector<double> eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const auto& v = es.eigenvalues();
  return std::vector<double>(v.data(), v.data() + v.size());
}

inline std::vector<double> eigenvalues(const Eigen::MatrixXi& m) { return eigenvalues(Eigen::MatrixXd(m.cast<double>())); }

// Expands {(value, multiplicity)} into a sorted list.
inline std::vector<double> multiset(const std::vector<std::pair<double, int>>& spec) {
  std::vector<double> out;
  for (const auto& [v, k] : spec) out.insert(out.end(), k, v);
  std::sort(out.begin(), out.end());
  return out;
}

inline double max_sorted_difference(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return INFINITY;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Number of bipartite components, from the kernel dimension of D + A.
inline std::size_t signless_nullity(const Graph& g, double tol = 1e-8) {
  auto ev = eigenvalues(Eigen::MatrixXi(oracle::degree_matrix(g) + oracle::adjacency(g)));
  return static_cast<std::size_t>(std::count_if(ev.begin(), ev.end(), [&](double x) { return std::abs(x) < tol; }));
}

// Plain BFS distances for cross-checking.
inline std::vector<std::size_t> distances(const Graph& g, Vertex s) {
  const std::size_t far = SIZE_MAX;
  std::vector<std::size_t> d(g.num_vertices(), far);
  std::vector<Vertex> frontier{s};
  d[s] = 0;
  for (std::size_t level = 1; !frontier.empty(); ++level) {
    std::vector<Vertex> next;
    for (Vertex x : frontier)
      for (const auto& e : g.edges()) {
        Vertex y = e.u == x ? e.v : e.v == x ? e.u : x;
        if (y != x && d[y] == far) {
          d[y] = level;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return d;
}

// min over nonempty S of (e_min(S) + |cut(S)|)/|S|, enumerating every 2-coloring of every S.
inline double bipartite_cheeger(const Graph& g) {
  const std::size_t n = g.num_vertices();
  double best = INFINITY;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(s));
    std::size_t cut = 0;
    std::vector<Edge> inner;
    for (const auto& e : g.edges()) {
      bool iu = s >> e.u & 1, iv = s >> e.v & 1;
      if (iu != iv) ++cut;
      if (iu && iv) inner.push_back(e);
    }
    std::size_t emin = inner.size();
    for (std::uint32_t c = s;; c = (c - 1) & s) {
      std::size_t mono = 0;
      for (const auto& e : inner) mono += ((c >> e.u) & 1) == ((c >> e.v) & 1);
      emin = std::min(emin, mono);
      if (c == 0) break;
    }
    best = std::min(best, static_cast<double>(emin + cut) / static_cast<double>(size));
  }
  return best;
}

// Eigenvalues 2 cos(2 pi j / n) of the n-cycle.
inline std::vector<double> cycle_spectrum(std::size_t n) {
  std::vector<double> out;
  for (std::size_t j = 0; j < n; ++j) out.push_back(2.0 * std::cos(2.0 * M_PI * static_cast<double>(j) / n));
  std::sort(out.begin(), out.end());
  return out;
}

// floor(v * 1000) / 1000: three printed decimals, truncated.
inline double truncate3(double v) { return std::floor(v * 1000.0) / 1000.0; }

}  // namespace oracle
