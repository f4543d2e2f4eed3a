#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lgl/hamiltonian.hpp"

namespace lgl {

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending
  double degeneracy_tol = 1e-8;

  std::size_t dim() const { return eigenvalues.size(); }
  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
  // Runs of eigenvalues whose consecutive spacing is within degeneracy_tol,
  // reported as (mean value, count).
  std::vector<std::pair<double, std::size_t>> multiplicities() const;
};

struct DenseOptions {
  std::size_t max_dim = 12000;
  double degeneracy_tol = 1e-8;
};

// Full spectrum via LAPACK dsyevd. Throws BudgetError above max_dim.
SpectrumResult dense_spectrum(const SparseSymMatrix& m, const DenseOptions& opts = {});
SpectrumResult dense_spectrum(const Eigen::MatrixXd& m, const DenseOptions& opts = {});

enum class Which { min, max, both };

struct LanczosOptions {
  double tol = 1e-8;              // residual norm target for a unit Ritz vector
  std::size_t max_restarts = 5000;
  std::size_t basis_size = 0;     // 0: 40 below 1e5 rows, 20 above
  std::uint64_t seed = 0x5EED;
  bool want_vector = false;
};

struct EigenEstimate {
  double value = 0.0;
  double residual = 0.0;  // ||A v - value v|| for unit v
  std::size_t matvecs = 0;
  std::vector<double> vector;  // filled when requested
};

struct ExtremalResult {
  std::optional<EigenEstimate> min;
  std::optional<EigenEstimate> max;
};

// Thick-restart Lanczos with full reorthogonalization against the current basis.
// The minimum comes from the largest eigenvalue of c I - A with c the max row sum.
// Throws NumericError (carrying the best residual) if max_restarts is exhausted.
ExtremalResult extremal_eigenvalues(const SparseSymMatrix& m, Which which, const LanczosOptions& opts = {});

struct DosHistogram {
  struct Bin {
    double center;
    std::size_t count;
    double fraction;
  };
  double bin_width = 0.04;
  std::vector<Bin> bins;  // nonempty bins only, ascending
  double range_min = 0.0;
  double range_max = 0.0;
};

// Bins are centered on integer multiples of bin_width.
DosHistogram dos(const SpectrumResult& sr, double bin_width = 0.04);

std::size_t flat_band_multiplicity(const SpectrumResult& sr, double energy);
// Distance from energy to the smallest eigenvalue above energy + degeneracy_tol.
double gap_above(const SpectrumResult& sr, double energy);

void write_spectrum_csv(std::ostream& os, const SpectrumResult& sr);
void write_dos_csv(std::ostream& os, const DosHistogram& h);

}  // namespace lgl
