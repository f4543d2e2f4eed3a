#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lgl/lattice.hpp"

namespace lgl {

// Momentum in fractional reciprocal coordinates: phase of cell (n1,n2) is exp(2 pi i (k1 n1 + k2 n2)).
struct KPoint {
  double k1 = 0.0;
  double k2 = 0.0;
};

class BlochHamiltonian {
 public:
  explicit BlochHamiltonian(PeriodicLattice pl);
  std::size_t dim() const { return lattice_.num_sites(); }
  const PeriodicLattice& lattice() const { return lattice_; }
  Eigen::MatrixXcd at(const KPoint& k) const;

 private:
  PeriodicLattice lattice_;
};

inline BlochHamiltonian bloch_hamiltonian(const PeriodicLattice& pl) { return BlochHamiltonian(pl); }

struct BandStructure {
  std::vector<KPoint> kpoints;
  std::vector<std::vector<double>> energies;  // energies[sample][band], ascending
  std::vector<std::pair<std::size_t, std::string>> labels;
  std::size_t num_bands() const { return energies.empty() ? 0 : energies.front().size(); }
};

struct KPath {
  std::vector<KPoint> points;
  std::vector<std::pair<std::size_t, std::string>> labels;
};

// Straight segments between corners; counts[i] samples on segment i, final corner included.
KPath make_path(const std::vector<KPoint>& corners, const std::vector<std::size_t>& counts,
                const std::vector<std::string>& names = {});
// Gamma-M-K-Gamma for hexagonal cells, Gamma-X-M-Gamma otherwise.
KPath default_path(const PeriodicLattice& pl, std::size_t per_segment = 60);
// N x N grid k = (a/N, b/N).
std::vector<KPoint> uniform_grid(std::size_t N);

// Throws NumericError if H(k) is not Hermitian to 1e-12.
BandStructure band_structure(const BlochHamiltonian& bh, const std::vector<KPoint>& ks);
double max_band_jump(const BandStructure& bs);

struct LiftingReport {
  bool passed = false;
  std::size_t degree = 0;
  std::size_t flat_bands = 0;     // m_c - J
  double max_deviation = 0.0;     // worst mismatch against d - 2 +/- E_X plus flat -2
  std::size_t samples = 0;
};

// Builds the line lattice of a d-regular layout and compares its bands with
// d - 2 + E_X (flavor s) or d - 2 - E_X (flavor a) plus m_c - J flat bands at -2.
LiftingReport verify_band_lifting(const PeriodicLattice& layout, Flavor flavor, const std::vector<KPoint>& samples,
                                  double tol = 1e-9);

struct FlatBand {
  std::size_t band = 0;
  double energy = 0.0;  // mean over samples
  double spread = 0.0;  // max - min
};

std::vector<FlatBand> flat_band_census(const BandStructure& bs, double flat_tol = 1e-9);

// Multiplicity of -2 in the dense spectrum of H_flavor on the N x N torus of the layout.
std::size_t torus_flat_band_count(const PeriodicLattice& layout, std::size_t N, Flavor flavor, double tol = 1e-8,
                                  std::size_t max_dim = 12000);

// "k_index,k_frac1,k_frac2,E_1,...,E_J"
void write_bands_csv(std::ostream& os, const BandStructure& bs);

}  // namespace lgl
