#include "lgl/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "lgl/errors.hpp"

namespace lgl {

namespace {
constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") references a vertex >= n=" + std::to_string(n_));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    adjacency_[fill[e.u]++] = {e.v, i};
    adjacency_[fill[e.v]++] = {e.u, i};
  }
  for (std::size_t v = 0; v < n_; ++v) {
    auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last, [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    auto dup = std::adjacent_find(first, last, [](const Incidence& a, const Incidence& b) {
      return a.neighbor == b.neighbor;
    });
    if (dup != last) {
      throw InputError("duplicate edge between " + std::to_string(v) + " and " +
                       std::to_string(dup->neighbor));
    }
  }
}

std::span<const Incidence> Graph::incident(Vertex v) const {
  if (v >= n_) throw InputError("vertex id " + std::to_string(v) + " out of range");
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(Vertex v) const {
  if (v >= n_) throw InputError("vertex id " + std::to_string(v) + " out of range");
  return offsets_[v + 1] - offsets_[v];
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

std::optional<EdgeId> Graph::edge_between(Vertex a, Vertex b) const {
  auto nbrs = incident(a);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b,
                             [](const Incidence& inc, Vertex x) { return inc.neighbor < x; });
  if (it != nbrs.end() && it->neighbor == b) return it->edge;
  return std::nullopt;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  const std::size_t d = degree(0);
  for (Vertex v = 1; v < n_; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

Graph Graph::canonical() const {
  std::vector<Edge> sorted;
  sorted.reserve(edges_.size());
  for (const auto& e : edges_) sorted.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::sort(sorted.begin(), sorted.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return Graph(n_, std::move(sorted));
}

OrientedGraph::OrientedGraph(Graph base, std::vector<bool> flip)
    : base_(std::move(base)), flip_(std::move(flip)) {
  if (flip_.size() != base_.num_edges()) {
    throw InputError("orientation has " + std::to_string(flip_.size()) + " flags for " +
                     std::to_string(base_.num_edges()) + " edges");
  }
}

OrientedGraph OrientedGraph::with_default_orientation(Graph base) {
  std::vector<bool> flip(base.num_edges());
  for (EdgeId e = 0; e < base.num_edges(); ++e) flip[e] = base.edge(e).u > base.edge(e).v;
  return OrientedGraph(std::move(base), std::move(flip));
}

Vertex OrientedGraph::head(EdgeId e) const {
  const auto& ed = base_.edge(e);
  return flip_[e] ? ed.u : ed.v;
}

Vertex OrientedGraph::foot(EdgeId e) const {
  const auto& ed = base_.edge(e);
  return flip_[e] ? ed.v : ed.u;
}

std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

BipartiteResult is_bipartite(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> color(n, 2);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != 2) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incident(x)) {
        if (color[inc.neighbor] == 2) {
          color[inc.neighbor] = static_cast<std::uint8_t>(1 - color[x]);
          queue.push_back(inc.neighbor);
        } else if (color[inc.neighbor] == color[x]) {
          return {false, std::nullopt};
        }
      }
    }
  }
  return {true, std::move(color)};
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.num_vertices(), kUnreached);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(x)) {
      if (dist[inc.neighbor] == kUnreached) {
        dist[inc.neighbor] = dist[x] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

// An edge (x,y) with dist[x] == dist[y] in the BFS from s closes an odd walk of
// length 2 dist + 1 through s; minimizing over all s gives the shortest odd cycle.
std::optional<std::size_t> shortest_odd_cycle_length(const Graph& g) {
  std::size_t best = kUnreached;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    auto dist = bfs_distances(g, s);
    for (const auto& e : g.edges()) {
      if (dist[e.u] != kUnreached && dist[e.u] == dist[e.v]) {
        best = std::min(best, 2 * dist[e.u] + 1);
      }
    }
  }
  if (best == kUnreached) return std::nullopt;
  return best;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> to_new(g.num_vertices(), std::numeric_limits<Vertex>::max());
  std::vector<Vertex> to_old(vertices.begin(), vertices.end());
  for (Vertex i = 0; i < to_old.size(); ++i) to_new.at(to_old[i]) = i;
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    Vertex a = to_new[e.u], b = to_new[e.v];
    if (a != std::numeric_limits<Vertex>::max() && b != std::numeric_limits<Vertex>::max()) {
      edges.push_back({a, b});
    }
  }
  return {Graph(to_old.size(), std::move(edges)), std::move(to_old)};
}

InducedSubgraph induced_ball(const Graph& g, Vertex center, std::size_t radius) {
  if (center >= g.num_vertices()) throw InputError("ball center out of range");
  auto dist = bfs_distances(g, center);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (dist[v] <= radius) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<bool> seen(g.num_vertices(), false);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (const auto& inc : g.incident(comp[head])) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          comp.push_back(inc.neighbor);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace {

struct SortedEdge {
  Vertex u, v;
  bool first_is_foot;
};

std::vector<SortedEdge> sorted_edges(const Graph& g, const std::vector<bool>* flips) {
  std::vector<SortedEdge> out;
  out.reserve(g.num_edges());
  for (EdgeId i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edge(i);
    Vertex foot = (flips && (*flips)[i]) ? e.v : e.u;
    Vertex a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    out.push_back({a, b, foot == a});
  }
  std::sort(out.begin(), out.end(),
            [](const SortedEdge& x, const SortedEdge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
  return out;
}

}  // namespace

void write_graph(std::ostream& os, const Graph& g) {
  os << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : sorted_edges(g, nullptr)) os << e.u << ' ' << e.v << '\n';
}

void write_oriented_graph(std::ostream& os, const OrientedGraph& og) {
  const auto& g = og.base();
  os << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : sorted_edges(g, &og.flips())) {
    os << e.u << ' ' << e.v << ' ' << (e.first_is_foot ? 0 : 1) << '\n';
  }
}

namespace {

bool next_content_line(std::istream& is, std::string& line, std::size_t& lineno) {
  while (std::getline(is, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void parse_fail(std::size_t lineno, const std::string& msg) {
  throw InputError("graph parse error at line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

ParsedGraph read_graph(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(is, line, lineno)) throw InputError("graph parse error: empty input");
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m) || n < 0 || m < 0) parse_fail(lineno, "expected header \"n m\"");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<bool> flips;
  std::optional<bool> oriented;
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(is, line, lineno)) parse_fail(lineno, "expected " + std::to_string(m) + " edges");
    std::istringstream es(line);
    long long u = -1, v = -1;
    if (!(es >> u >> v) || u < 0 || v < 0 || u >= n || v >= n) parse_fail(lineno, "bad edge line");
    int flag = -1;
    bool has_flag = static_cast<bool>(es >> flag);
    if (!oriented) oriented = has_flag;
    if (*oriented != has_flag) parse_fail(lineno, "inconsistent orientation column");
    if (has_flag && flag != 0 && flag != 1) parse_fail(lineno, "orientation flag must be 0 or 1");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    flips.push_back(has_flag && flag == 1);
  }
  ParsedGraph out;
  std::optional<std::vector<std::vector<Vertex>>> faces;
  if (next_content_line(is, line, lineno)) {
    std::istringstream fs(line);
    std::string tag;
    long long f = -1;
    if (!(fs >> tag >> f) || tag != "faces" || f < 0) parse_fail(lineno, "unexpected trailing content");
    faces.emplace();
    for (long long i = 0; i < f; ++i) {
      if (!next_content_line(is, line, lineno)) parse_fail(lineno, "missing face lines");
      std::istringstream ls(line);
      std::vector<Vertex> face;
      long long x;
      while (ls >> x) {
        if (x < 0 || x >= n) parse_fail(lineno, "face vertex out of range");
        face.push_back(static_cast<Vertex>(x));
      }
      faces->push_back(std::move(face));
    }
    if (next_content_line(is, line, lineno)) parse_fail(lineno, "unexpected trailing content");
  }
  out.graph = Graph(static_cast<std::size_t>(n), std::move(edges));
  if (oriented.value_or(false)) out.flips = std::move(flips);
  out.faces = std::move(faces);
  return out;
}

ParsedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path);
  return read_graph(in);
}

}  // namespace lgl
