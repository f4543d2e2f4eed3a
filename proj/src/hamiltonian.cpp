#include "lgl/hamiltonian.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string_view>

#include "lgl/errors.hpp"

namespace lgl {

SparseSymMatrix::SparseSymMatrix(std::size_t dim, const std::vector<Triplet>& entries) : dim_(dim) {
  upper_.reserve(entries.size());
  for (const auto& t : entries) {
    if (t.row >= dim || t.col >= dim) throw InputError("matrix entry out of range");
    if (!std::isfinite(t.value)) throw NumericError("non-finite matrix entry");
    upper_.push_back({std::min(t.row, t.col), std::max(t.row, t.col), t.value});
  }
  std::sort(upper_.begin(), upper_.end(), [](const Triplet& a, const Triplet& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  std::vector<Triplet> merged;
  for (const auto& t : upper_) {
    if (!merged.empty() && merged.back().row == t.row && merged.back().col == t.col)
      merged.back().value += t.value;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Triplet& t) { return t.value == 0.0; });
  upper_ = std::move(merged);

  std::vector<std::size_t> count(dim_ + 1, 0);
  for (const auto& t : upper_) {
    ++count[t.row + 1];
    if (t.row != t.col) ++count[t.col + 1];
  }
  row_ptr_.assign(dim_ + 1, 0);
  for (std::size_t i = 0; i < dim_; ++i) row_ptr_[i + 1] = row_ptr_[i] + count[i + 1];
  col_.resize(row_ptr_[dim_]);
  val_.resize(row_ptr_[dim_]);
  std::vector<std::size_t> fill(row_ptr_.begin(), row_ptr_.end() - 1);
  for (const auto& t : upper_) {
    col_[fill[t.row]] = static_cast<std::uint32_t>(t.col);
    val_[fill[t.row]++] = t.value;
    if (t.row != t.col) {
      col_[fill[t.col]] = static_cast<std::uint32_t>(t.row);
      val_[fill[t.col]++] = t.value;
    }
  }
}

void SparseSymMatrix::matvec(const double* x, double* y) const {
  const auto n = static_cast<std::ptrdiff_t>(dim_);
#pragma omp parallel for schedule(static) if (n > 20000)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) s += val_[p] * x[col_[p]];
    y[i] = s;
  }
}

std::vector<std::int64_t> SparseSymMatrix::matvec_exact(const std::vector<std::int64_t>& x) const {
  if (x.size() != dim_) throw InputError("vector length does not match matrix dimension");
  if (!is_integer()) throw InputError("exact product needs an integer matrix");
  std::vector<std::int64_t> y(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
      y[i] += static_cast<std::int64_t>(val_[p]) * x[col_[p]];
  return y;
}

double SparseSymMatrix::trace() const {
  double t = 0.0;
  for (const auto& e : upper_)
    if (e.row == e.col) t += e.value;
  return t;
}

double SparseSymMatrix::max_abs_row_sum() const {
  double best = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    double s = 0.0;
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) s += std::abs(val_[p]);
    best = std::max(best, s);
  }
  return best;
}

bool SparseSymMatrix::is_integer() const {
  return std::all_of(upper_.begin(), upper_.end(),
                     [](const Triplet& t) { return t.value == std::round(t.value) && std::abs(t.value) < 1e15; });
}

Eigen::MatrixXd SparseSymMatrix::to_dense() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (const auto& t : upper_) {
    d(static_cast<Eigen::Index>(t.row), static_cast<Eigen::Index>(t.col)) = t.value;
    d(static_cast<Eigen::Index>(t.col), static_cast<Eigen::Index>(t.row)) = t.value;
  }
  return d;
}

SparseSymMatrix IncidenceMatrix::transpose_times_self() const {
  std::vector<Triplet> t;
  t.reserve(3 * rows.size());
  for (const auto& r : rows) {
    t.push_back({r.first, r.first, static_cast<double>(r.first_value * r.first_value)});
    t.push_back({r.second, r.second, static_cast<double>(r.second_value * r.second_value)});
    t.push_back({r.first, r.second, static_cast<double>(r.first_value * r.second_value)});
  }
  return SparseSymMatrix(num_vertices, t);
}

SparseSymMatrix IncidenceMatrix::self_times_transpose() const {
  // Rows meeting at a vertex: collect (row, value) per column.
  std::vector<std::vector<std::pair<std::size_t, int>>> by_col(num_vertices);
  for (std::size_t e = 0; e < rows.size(); ++e) {
    by_col.at(rows[e].first).push_back({e, rows[e].first_value});
    by_col.at(rows[e].second).push_back({e, rows[e].second_value});
  }
  std::vector<Triplet> t;
  for (const auto& col : by_col)
    for (std::size_t x = 0; x < col.size(); ++x)
      for (std::size_t y = x; y < col.size(); ++y)
        t.push_back({col[x].first, col[y].first, static_cast<double>(col[x].second * col[y].second)});
  return SparseSymMatrix(rows.size(), t);
}

Eigen::MatrixXd IncidenceMatrix::to_dense() const {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()),
                                            static_cast<Eigen::Index>(num_vertices));
  for (std::size_t e = 0; e < rows.size(); ++e) {
    d(static_cast<Eigen::Index>(e), rows[e].first) = rows[e].first_value;
    d(static_cast<Eigen::Index>(e), rows[e].second) = rows[e].second_value;
  }
  return d;
}

SparseSymMatrix adjacency(const Graph& g) {
  std::vector<Triplet> t;
  t.reserve(g.num_edges());
  for (const auto& e : g.edges()) t.push_back({e.u, e.v, 1.0});
  return SparseSymMatrix(g.num_vertices(), t);
}

IncidenceMatrix incidence_s(const Graph& g) {
  IncidenceMatrix m;
  m.flavor = Flavor::s;
  m.num_vertices = g.num_vertices();
  for (const auto& e : g.edges()) m.rows.push_back({e.u, e.v, 1, 1});
  return m;
}

IncidenceMatrix incidence_a(const OrientedGraph& og) {
  IncidenceMatrix m;
  m.flavor = Flavor::a;
  m.num_vertices = og.base().num_vertices();
  for (EdgeId e = 0; e < og.base().num_edges(); ++e) m.rows.push_back({og.head(e), og.foot(e), 1, -1});
  return m;
}

SparseSymMatrix signed_laplacian(const Graph& g, LaplacianSign sign) {
  std::vector<Triplet> t;
  const double s = sign == LaplacianSign::plus ? 1.0 : -1.0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) t.push_back({v, v, static_cast<double>(g.degree(v))});
  for (const auto& e : g.edges()) t.push_back({e.u, e.v, s});
  return SparseSymMatrix(g.num_vertices(), t);
}

SparseSymMatrix effective_hamiltonian(const Graph& g, Flavor flavor, const HamiltonianOptions& opts) {
  std::optional<OrientedGraph> og;
  if (flavor == Flavor::a) {
    og = opts.orientation ? *opts.orientation : OrientedGraph::with_default_orientation(g);
    if (!(og->base() == g)) throw InputError("orientation belongs to a different graph");
  }
  std::vector<Triplet> t;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t x = 0; x < inc.size(); ++x)
      for (std::size_t y = x + 1; y < inc.size(); ++y) {
        double w = 1.0;
        if (og) {
          const bool hx = og->head(inc[x].edge) == v;
          const bool hy = og->head(inc[y].edge) == v;
          w = hx == hy ? 1.0 : -1.0;
        }
        t.push_back({inc[x].edge, inc[y].edge, w});
      }
  }
  SparseSymMatrix h(g.num_edges(), t);
  if (opts.validate) {
    auto inc = flavor == Flavor::s ? incidence_s(g) : incidence_a(*og);
    if (!(identity_shift(inc.self_times_transpose(), -2.0) == h))
      throw NumericError("effective Hamiltonian differs from its incidence factorization");
  }
  return h;
}

SparseSymMatrix identity_shift(const SparseSymMatrix& m, double shift) {
  std::vector<Triplet> t = m.upper();
  for (std::size_t i = 0; i < m.dim(); ++i) t.push_back({i, i, shift});
  return SparseSymMatrix(m.dim(), t);
}

SparseSymMatrix subtract(const SparseSymMatrix& a, const SparseSymMatrix& b) {
  if (a.dim() != b.dim()) throw InputError("matrix dimensions differ");
  std::vector<Triplet> t = a.upper();
  for (const auto& e : b.upper()) t.push_back({e.row, e.col, -e.value});
  return SparseSymMatrix(a.dim(), t);
}

void write_matrix(std::ostream& os, const SparseSymMatrix& m) {
  os << m.dim() << ' ' << m.nnz_upper() << '\n';
  char buf[64];
  for (const auto& t : m.upper()) {
    auto res = std::to_chars(buf, buf + sizeof buf, t.value);
    os << t.row << ' ' << t.col << ' ' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)) << '\n';
  }
}

}  // namespace lgl
