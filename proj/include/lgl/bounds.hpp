#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lgl/graph.hpp"

namespace lgl {

// 2 sqrt((2k-3)/(k-2)), upper bound on lambda_max of the {k,3} tiling.
double cheeger_upper_bound(int k);

// min over s > 0 of 2 cosh s + Q(coth(ks/2) / sinh s) with Q(x) = (sqrt(x^2+1) - 1)/x.
double paschke_objective(int k, double s);
double paschke_lower_bound(int k, double opt_tol = 1e-12);

// 1 + cos(2 pi nu / (2 nu + 1)) with nu = (k-1)/2; k odd.
double odd_k_gap_bound(int k);

// 1 / (48 (3 * 2^(2r-1) - 1)^2).
double appendix_d_bound(int r);

// min over nonempty S of (e_min(S) + |cut(S)|) / |S| by exhaustive enumeration.
double bipartite_cheeger(const Graph& g, std::size_t max_vertices = 18);

// m_k from k = 2^a 3^b k1 with gcd(k1, 6) = 1.
int m_k(int k);
int band_count_bound(int k);  // m_k / 3

enum class SubdivisionMap { to_S, to_LS };
// Image of one layout eigenvalue: +-sqrt(E+3) for S(X), (1 +- sqrt(1 + 4(E+3)))/2 for L(S(X)).
std::vector<double> subdivision_spectrum_map(double ev, SubdivisionMap direction);
// Full predicted spectra for a 3-regular X on n vertices, including the 0 and -2 padding.
std::vector<double> subdivision_spectrum(const std::vector<double>& layout_spectrum, SubdivisionMap direction);

struct GapInterval {
  std::string name;
  std::vector<std::pair<double, double>> components;  // disjoint, ascending, inside [-3, 3]
  bool contains(double x) const;
};

struct GapCatalog {
  GapInterval mclaughlin;
  GapInterval ramanujan;
  GapInterval hoffman_planar;
  double b, b_prime, c, c_prime;
};

GapCatalog maximal_gap_intervals();

struct GapFitModel {
  double A = 0.0;
  double w = 1.0;
  double s = 1.0;
  double p = 1.4;
  int sign = 1;  // gap(r) = A + sign / (w + (r/s)^p)
  double rms = 0.0;
  std::size_t n_points = 0;
  std::optional<Eigen::Matrix4d> covariance;

  double operator()(double r) const;
  // Distance of the asymptote from the band edge at 3 in magnitude.
  double asymptotic_gap() const { return 3.0 - (A < 0 ? -A : A); }
};

// Levenberg-Marquardt fit of A + sign / (w + (r/s)^p). Needs >= 5 points with r increasing.
GapFitModel fit_gap_curve(const std::vector<double>& r, const std::vector<double>& values, int sign);

void write_fit_json(std::ostream& os, const GapFitModel& m);

struct RamanujanCheck {
  bool ramanujan = false;
  double lambda1 = 0.0;  // smallest nonzero eigenvalue of D - A
};

// 3-regular connected g: lambda_1(D - A) >= 3 - 2 sqrt 2.
RamanujanCheck is_ramanujan_layout(const Graph& g, std::size_t max_dense = 12000);

// "k,cheeger_upper,paschke_lower,odd_k_bound,band_count_bound"
void write_bounds_csv(std::ostream& os, int k_min, int k_max);

}  // namespace lgl
