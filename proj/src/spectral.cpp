#include "lgl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <random>

#include <lapacke.h>

#include "lgl/errors.hpp"
#include "lgl/format.hpp"

namespace lgl {

std::vector<std::pair<double, std::size_t>> SpectrumResult::multiplicities() const {
  std::vector<std::pair<double, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= eigenvalues.size(); ++i) {
    if (i == eigenvalues.size() || eigenvalues[i] - eigenvalues[i - 1] > degeneracy_tol) {
      double sum = 0.0;
      for (std::size_t j = start; j < i; ++j) sum += eigenvalues[j];
      out.push_back({sum / static_cast<double>(i - start), i - start});
      start = i;
    }
  }
  return out;
}

SpectrumResult dense_spectrum(const Eigen::MatrixXd& m, const DenseOptions& opts) {
  if (m.rows() != m.cols()) throw InputError("dense_spectrum needs a square matrix");
  const auto n = static_cast<std::size_t>(m.rows());
  if (n > opts.max_dim) {
    throw BudgetError("dimension " + std::to_string(n) + " exceeds the dense cap " + std::to_string(opts.max_dim) +
                      "; use extremal_eigenvalues instead");
  }
  SpectrumResult sr;
  sr.degeneracy_tol = opts.degeneracy_tol;
  if (n == 0) return sr;
  Eigen::MatrixXd a = m;
  sr.eigenvalues.resize(n);
  const auto ln = static_cast<lapack_int>(n);
  lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'U', ln, a.data(), ln, sr.eigenvalues.data());
  if (info != 0) throw NumericError("dsyevd failed with info " + std::to_string(info));
  std::sort(sr.eigenvalues.begin(), sr.eigenvalues.end());

  double sum = 0.0;
  for (double x : sr.eigenvalues) sum += x;
  if (std::abs(sum - m.trace()) > static_cast<double>(n) * 1e-8 * std::max(1.0, m.cwiseAbs().maxCoeff()))
    throw NumericError("eigenvalue sum does not match the trace");
  return sr;
}

SpectrumResult dense_spectrum(const SparseSymMatrix& m, const DenseOptions& opts) {
  if (m.dim() > opts.max_dim) {
    throw BudgetError("dimension " + std::to_string(m.dim()) + " exceeds the dense cap " +
                      std::to_string(opts.max_dim) + "; use extremal_eigenvalues instead");
  }
  return dense_spectrum(m.to_dense(), opts);
}

namespace {

using Op = std::function<void(const double*, double*)>;

// Largest eigenpair of the symmetric operator op.
EigenEstimate lanczos_top(const Op& op, std::size_t n, const LanczosOptions& opts) {
  std::size_t m = opts.basis_size ? opts.basis_size : (n < 100000 ? 40 : 20);
  m = std::max<std::size_t>(2, std::min(m, n));
  const std::size_t keep = std::max<std::size_t>(1, m / 3);
  const auto N = static_cast<Eigen::Index>(n);

  Eigen::MatrixXd V(N, static_cast<Eigen::Index>(m + 1));
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  {
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (Eigen::Index i = 0; i < N; ++i) V(i, 0) = dist(rng);
    V.col(0).normalize();
  }

  EigenEstimate est;
  double best_residual = std::numeric_limits<double>::infinity();
  Eigen::VectorXd w(N);
  std::size_t start = 0;

  for (std::size_t restart = 0; restart <= opts.max_restarts; ++restart) {
    std::size_t size = m;
    double beta = 0.0;
    for (std::size_t i = start; i < m; ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      op(V.col(ii).data(), w.data());
      ++est.matvecs;
      Eigen::VectorXd h = V.leftCols(ii + 1).transpose() * w;
      w.noalias() -= V.leftCols(ii + 1) * h;
      Eigen::VectorXd h2 = V.leftCols(ii + 1).transpose() * w;
      w.noalias() -= V.leftCols(ii + 1) * h2;
      h += h2;
      T.block(0, ii, ii + 1, 1) = h;
      T.block(ii, 0, 1, ii + 1) = h.transpose();
      beta = w.norm();
      const double scale = std::max(1.0, T.block(0, 0, ii + 1, ii + 1).cwiseAbs().maxCoeff());
      if (beta <= 1e-13 * scale) {
        // Invariant subspace: the Ritz values are exact.
        size = i + 1;
        beta = 0.0;
        break;
      }
      V.col(ii + 1) = w / beta;
      if (i + 1 < m) {
        T(ii + 1, ii) = beta;
        T(ii, ii + 1) = beta;
      }
    }

    const auto S = static_cast<Eigen::Index>(size);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(T.topLeftCorner(S, S));
    const Eigen::VectorXd& theta = eig.eigenvalues();  // ascending
    const Eigen::MatrixXd& Y = eig.eigenvectors();
    const double ritz_residual = std::abs(beta * Y(S - 1, S - 1));

    if (ritz_residual <= opts.tol || beta == 0.0) {
      Eigen::VectorXd x = V.leftCols(S) * Y.col(S - 1);
      x.normalize();
      op(x.data(), w.data());
      ++est.matvecs;
      const double value = x.dot(w);
      const double true_residual = (w - value * x).norm();
      best_residual = std::min(best_residual, true_residual);
      if (true_residual <= std::max(opts.tol, 10.0 * ritz_residual) || beta == 0.0) {
        est.value = value;
        est.residual = true_residual;
        if (opts.want_vector) est.vector.assign(x.data(), x.data() + N);
        return est;
      }
    }
    best_residual = std::min(best_residual, ritz_residual);

    // Thick restart: keep the top Ritz vectors and append the residual direction.
    const auto K = static_cast<Eigen::Index>(std::min<std::size_t>(keep, size - 1));
    Eigen::MatrixXd Yk = Y.rightCols(K);
    Eigen::MatrixXd kept = V.leftCols(S) * Yk;
    V.col(K) = V.col(S);
    V.leftCols(K) = kept;
    T.setZero();
    for (Eigen::Index l = 0; l < K; ++l) {
      T(l, l) = theta(S - K + l);
      T(K, l) = beta * Yk(S - 1, l);
      T(l, K) = T(K, l);
    }
    start = static_cast<std::size_t>(K);
  }
  throw NumericError("Lanczos did not converge within " + std::to_string(opts.max_restarts) + " restarts",
                     best_residual);
}

}  // namespace

ExtremalResult extremal_eigenvalues(const SparseSymMatrix& m, Which which, const LanczosOptions& opts) {
  if (m.dim() < 2) throw InputError("extremal_eigenvalues needs dimension >= 2");
  ExtremalResult out;
  if (which != Which::min) {
    out.max = lanczos_top([&](const double* x, double* y) { m.matvec(x, y); }, m.dim(), opts);
  }
  if (which != Which::max) {
    const double c = m.max_abs_row_sum();
    const auto n = static_cast<std::ptrdiff_t>(m.dim());
    auto est = lanczos_top(
        [&](const double* x, double* y) {
          m.matvec(x, y);
          for (std::ptrdiff_t i = 0; i < n; ++i) y[i] = c * x[i] - y[i];
        },
        m.dim(), opts);
    est.value = c - est.value;
    out.min = std::move(est);
  }
  return out;
}

DosHistogram dos(const SpectrumResult& sr, double bin_width) {
  if (!(bin_width > 0.0)) throw InputError("bin width must be positive");
  DosHistogram h;
  h.bin_width = bin_width;
  if (sr.eigenvalues.empty()) return h;
  h.range_min = sr.eigenvalues.front();
  h.range_max = sr.eigenvalues.back();
  const double dim = static_cast<double>(sr.dim());
  for (double x : sr.eigenvalues) {
    const long long idx = std::llround(x / bin_width);
    const double center = static_cast<double>(idx) * bin_width;
    if (!h.bins.empty() && std::llround(h.bins.back().center / bin_width) == idx)
      ++h.bins.back().count;
    else
      h.bins.push_back({center, 1, 0.0});
  }
  for (auto& b : h.bins) b.fraction = static_cast<double>(b.count) / dim;
  return h;
}

std::size_t flat_band_multiplicity(const SpectrumResult& sr, double energy) {
  return static_cast<std::size_t>(std::count_if(sr.eigenvalues.begin(), sr.eigenvalues.end(),
                                                [&](double x) { return std::abs(x - energy) <= sr.degeneracy_tol; }));
}

double gap_above(const SpectrumResult& sr, double energy) {
  auto it = std::upper_bound(sr.eigenvalues.begin(), sr.eigenvalues.end(), energy + sr.degeneracy_tol);
  if (it == sr.eigenvalues.end()) throw InputError("no eigenvalue above " + format_number(energy));
  return *it - energy;
}

void write_spectrum_csv(std::ostream& os, const SpectrumResult& sr) {
  os << "index,eigenvalue\n";
  for (std::size_t i = 0; i < sr.eigenvalues.size(); ++i) os << i << ',' << format_number(sr.eigenvalues[i]) << '\n';
}

void write_dos_csv(std::ostream& os, const DosHistogram& h) {
  os << "bin_center,count,fraction\n";
  for (const auto& b : h.bins)
    os << format_number(b.center) << ',' << b.count << ',' << format_number(b.fraction) << '\n';
}

}  // namespace lgl
