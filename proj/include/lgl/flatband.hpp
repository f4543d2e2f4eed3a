#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "lgl/graph.hpp"
#include "lgl/hamiltonian.hpp"

namespace lgl {

enum class Parity { even, odd, any };

// A shortest cycle of the requested parity with at most max_len edges, as a vertex
// sequence (closing edge implied). Exhaustive and deterministic: the cycle with
// the smallest starting vertex, then lexicographically first.
std::optional<std::vector<Vertex>> find_cycle(const Graph& g, Parity parity, std::size_t max_len);

struct EdgeState {
  Flavor flavor = Flavor::s;
  std::size_t num_edges = 0;
  std::vector<Vertex> cycle;
  std::vector<std::pair<EdgeId, int>> support;  // integer amplitudes in {-1, +1}

  std::vector<std::int64_t> integer_vector() const;
  std::vector<double> normalized() const;
};

// Alternating +-1 around an even cycle: H_s psi = -2 psi. Throws InputError on odd or invalid cycles.
EdgeState compact_state_s(const Graph& g, const std::vector<Vertex>& cycle);
// Works for any cycle: +1 on edges oriented along the traversal, -1 against it.
EdgeState compact_state_a(const OrientedGraph& og, const std::vector<Vertex>& cycle);

// ||H v - E v||_2.
double verify_eigenstate(const SparseSymMatrix& h, const std::vector<double>& state, double energy);
// Squared residual of H v - E v in exact integer arithmetic.
std::int64_t exact_residual(const SparseSymMatrix& h, const std::vector<std::int64_t>& state, std::int64_t energy);

// Boundary of two faces sharing exactly one edge and nothing else, as a vertex cycle.
std::optional<std::vector<Vertex>> merge_faces(const std::vector<Vertex>& f1, const std::vector<Vertex>& f2);

// "# flavor <s|a>", "# cycle v0 v1 ...", then "edge_id amplitude" per supported edge.
void write_state(std::ostream& os, const EdgeState& st);

}  // namespace lgl
