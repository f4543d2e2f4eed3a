#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "lgl/graph.hpp"

namespace lgl {

struct Triplet {
  std::size_t row;
  std::size_t col;
  double value;
  friend bool operator==(const Triplet&, const Triplet&) = default;
};

// Real symmetric sparse matrix. The upper triangle (row <= col) is stored once as
// sorted triplets; a full CSR copy backs matvec.
class SparseSymMatrix {
 public:
  SparseSymMatrix() = default;
  // Entries may come from either triangle; duplicates are summed, zeros dropped.
  SparseSymMatrix(std::size_t dim, const std::vector<Triplet>& entries);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Triplet>& upper() const noexcept { return upper_; }
  std::size_t nnz_upper() const noexcept { return upper_.size(); }

  void matvec(const double* x, double* y) const;
  // Exact product for integer-valued matrices and vectors.
  std::vector<std::int64_t> matvec_exact(const std::vector<std::int64_t>& x) const;

  double trace() const;
  double max_abs_row_sum() const;
  bool is_integer() const;
  Eigen::MatrixXd to_dense() const;

  friend bool operator==(const SparseSymMatrix& a, const SparseSymMatrix& b) {
    return a.dim_ == b.dim_ && a.upper_ == b.upper_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Triplet> upper_;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::uint32_t> col_;
  std::vector<double> val_;
};

// Edge-by-vertex incidence matrix with two nonzeros per row.
struct IncidenceMatrix {
  struct Row {
    Vertex first;
    Vertex second;
    int first_value;
    int second_value;
  };
  Flavor flavor = Flavor::s;
  std::size_t num_vertices = 0;
  std::vector<Row> rows;

  std::size_t num_rows() const { return rows.size(); }
  // Gram matrices: columns (vertex x vertex) and rows (edge x edge).
  SparseSymMatrix transpose_times_self() const;  // M^t M
  SparseSymMatrix self_times_transpose() const;  // M M^t
  Eigen::MatrixXd to_dense() const;
};

SparseSymMatrix adjacency(const Graph& g);
IncidenceMatrix incidence_s(const Graph& g);
IncidenceMatrix incidence_a(const OrientedGraph& og);

enum class LaplacianSign { plus, minus };
// D + A or D - A.
SparseSymMatrix signed_laplacian(const Graph& g, LaplacianSign sign);

struct HamiltonianOptions {
  std::optional<OrientedGraph> orientation;  // flavor a only; default foot = smaller id
  bool validate = false;                      // cross-check against the incidence factorization
};

// H_s or H_a on the edge space, assembled from the bond weights w_s, w_a.
SparseSymMatrix effective_hamiltonian(const Graph& g, Flavor flavor, const HamiltonianOptions& opts = {});

SparseSymMatrix identity_shift(const SparseSymMatrix& m, double shift);  // m + shift * I
SparseSymMatrix subtract(const SparseSymMatrix& a, const SparseSymMatrix& b);

// "dim nnz" then "i j v" per stored upper-triangle entry.
void write_matrix(std::ostream& os, const SparseSymMatrix& m);

}  // namespace lgl
