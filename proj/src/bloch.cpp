#include "lgl/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>

#include "lgl/errors.hpp"
#include "lgl/format.hpp"
#include "lgl/hamiltonian.hpp"
#include "lgl/spectral.hpp"

namespace lgl {

BlochHamiltonian::BlochHamiltonian(PeriodicLattice pl) : lattice_(std::move(pl)) {
  for (const auto& h : lattice_.hoppings)
    if (h.i >= lattice_.num_sites() || h.j >= lattice_.num_sites()) throw InputError("hopping site out of range");
}

Eigen::MatrixXcd BlochHamiltonian::at(const KPoint& k) const {
  const auto J = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(J, J);
  for (const auto& h : lattice_.hoppings) {
    const double phase = 2.0 * std::numbers::pi * (k.k1 * h.n1 + k.k2 * h.n2);
    const std::complex<double> z = h.value * std::polar(1.0, phase);
    const auto i = static_cast<Eigen::Index>(h.i), j = static_cast<Eigen::Index>(h.j);
    H(i, j) += z;
    H(j, i) += std::conj(z);
  }
  return H;
}

KPath make_path(const std::vector<KPoint>& corners, const std::vector<std::size_t>& counts,
                const std::vector<std::string>& names) {
  if (corners.size() < 2 || counts.size() + 1 != corners.size())
    throw InputError("path needs n corners and n-1 segment counts");
  KPath path;
  for (std::size_t s = 0; s + 1 < corners.size(); ++s) {
    if (counts[s] == 0) throw InputError("segment sample count must be positive");
    if (s < names.size()) path.labels.push_back({path.points.size(), names[s]});
    for (std::size_t t = 0; t < counts[s]; ++t) {
      const double f = static_cast<double>(t) / static_cast<double>(counts[s]);
      path.points.push_back({corners[s].k1 + f * (corners[s + 1].k1 - corners[s].k1),
                             corners[s].k2 + f * (corners[s + 1].k2 - corners[s].k2)});
    }
  }
  if (names.size() >= corners.size()) path.labels.push_back({path.points.size(), names[corners.size() - 1]});
  path.points.push_back(corners.back());
  return path;
}

KPath default_path(const PeriodicLattice& pl, std::size_t per_segment) {
  if (pl.hexagonal)
    return make_path({{0, 0}, {0.5, 0}, {2.0 / 3.0, 1.0 / 3.0}, {0, 0}}, {per_segment, per_segment, per_segment},
                     {"G", "M", "K", "G"});
  return make_path({{0, 0}, {0.5, 0}, {0.5, 0.5}, {0, 0}}, {per_segment, per_segment, per_segment},
                   {"G", "X", "M", "G"});
}

std::vector<KPoint> uniform_grid(std::size_t N) {
  std::vector<KPoint> ks;
  ks.reserve(N * N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      ks.push_back({static_cast<double>(a) / static_cast<double>(N), static_cast<double>(b) / static_cast<double>(N)});
  return ks;
}

namespace {

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& H) {
  if ((H - H.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw NumericError("Bloch matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(H, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw NumericError("Bloch eigensolve failed");
  std::vector<double> e(eig.eigenvalues().data(), eig.eigenvalues().data() + eig.eigenvalues().size());
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

BandStructure band_structure(const BlochHamiltonian& bh, const std::vector<KPoint>& ks) {
  if (ks.empty()) throw InputError("band_structure needs at least one k-point");
  BandStructure bs;
  bs.kpoints = ks;
  bs.energies.resize(ks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(ks.size()); ++s)
    bs.energies[static_cast<std::size_t>(s)] = hermitian_eigenvalues(bh.at(ks[static_cast<std::size_t>(s)]));
  return bs;
}

double max_band_jump(const BandStructure& bs) {
  double jump = 0.0;
  for (std::size_t s = 1; s < bs.energies.size(); ++s)
    for (std::size_t j = 0; j < bs.num_bands(); ++j)
      jump = std::max(jump, std::abs(bs.energies[s][j] - bs.energies[s - 1][j]));
  return jump;
}

LiftingReport verify_band_lifting(const PeriodicLattice& layout, Flavor flavor, const std::vector<KPoint>& samples,
                                  double tol) {
  auto d = layout.regular_degree();
  if (!d) throw InputError("verify_band_lifting needs a regular layout");
  LiftingReport rep;
  rep.degree = *d;
  rep.samples = samples.size();
  const std::size_t J = layout.num_sites();
  const std::size_t mc = layout.hoppings.size();
  rep.flat_bands = mc - J;

  const BlochHamiltonian hx(layout);
  const BlochHamiltonian hl(medial_lattice(layout, flavor));
  const double sign = flavor == Flavor::s ? 1.0 : -1.0;
  const double shift = static_cast<double>(*d) - 2.0;
  for (const auto& k : samples) {
    auto ex = hermitian_eigenvalues(hx.at(k));
    auto el = hermitian_eigenvalues(hl.at(k));
    std::vector<double> predicted(rep.flat_bands, -2.0);
    for (double e : ex) predicted.push_back(shift + sign * e);
    std::sort(predicted.begin(), predicted.end());
    for (std::size_t j = 0; j < el.size(); ++j)
      rep.max_deviation = std::max(rep.max_deviation, std::abs(el[j] - predicted[j]));
  }
  rep.passed = rep.max_deviation <= tol;
  return rep;
}

std::vector<FlatBand> flat_band_census(const BandStructure& bs, double flat_tol) {
  std::vector<FlatBand> out;
  for (std::size_t j = 0; j < bs.num_bands(); ++j) {
    double lo = bs.energies[0][j], hi = lo, sum = 0.0;
    for (const auto& e : bs.energies) {
      lo = std::min(lo, e[j]);
      hi = std::max(hi, e[j]);
      sum += e[j];
    }
    if (hi - lo < flat_tol) out.push_back({j, sum / static_cast<double>(bs.energies.size()), hi - lo});
  }
  return out;
}

std::size_t torus_flat_band_count(const PeriodicLattice& layout, std::size_t N, Flavor flavor, double tol,
                                  std::size_t max_dim) {
  Graph g = torus_graph(layout, N, N);
  DenseOptions opts;
  opts.max_dim = max_dim;
  opts.degeneracy_tol = tol;
  auto sr = dense_spectrum(effective_hamiltonian(g, flavor), opts);
  return flat_band_multiplicity(sr, -2.0);
}

void write_bands_csv(std::ostream& os, const BandStructure& bs) {
  os << "k_index,k_frac1,k_frac2";
  for (std::size_t j = 0; j < bs.num_bands(); ++j) os << ",E_" << j + 1;
  os << '\n';
  for (std::size_t s = 0; s < bs.kpoints.size(); ++s) {
    os << s << ',' << format_number(bs.kpoints[s].k1) << ',' << format_number(bs.kpoints[s].k2);
    for (double e : bs.energies[s]) os << ',' << format_number(e);
    os << '\n';
  }
}

}  // namespace lgl
