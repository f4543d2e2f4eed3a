#include "lgl/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <ostream>

#include <json.hpp>
#include <unsupported/Eigen/NonLinearOptimization>

#include "lgl/errors.hpp"
#include "lgl/format.hpp"
#include "lgl/hamiltonian.hpp"
#include "lgl/spectral.hpp"

namespace lgl {

namespace {
void require_hyperbolic(int k) {
  if (k < 7) throw InputError("k must be at least 7, got " + std::to_string(k));
}
}  // namespace

double cheeger_upper_bound(int k) {
  require_hyperbolic(k);
  return 2.0 * std::sqrt((2.0 * k - 3.0) / (k - 2.0));
}

double paschke_objective(int k, double s) {
  if (!(s > 0.0)) throw InputError("paschke_objective needs s > 0");
  // (cosh(ks) + 1) / (sinh s sinh ks) = coth(ks/2) / sinh s
  const double x = 1.0 / (std::tanh(0.5 * k * s) * std::sinh(s));
  const double q = x / (std::sqrt(x * x + 1.0) + 1.0);
  return 2.0 * std::cosh(s) + q;
}

double paschke_lower_bound(int k, double opt_tol) {
  require_hyperbolic(k);
  const double lo = 1e-6, hi = 10.0;
  const int samples = 2000;
  auto f = [k](double s) { return paschke_objective(k, s); };
  int best = 0;
  double best_val = f(lo);
  for (int i = 1; i <= samples; ++i) {
    const double s = lo + (hi - lo) * i / samples;
    const double v = f(s);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = lo + (hi - lo) * std::max(0, best - 1) / samples;
  double b = lo + (hi - lo) * std::min(samples, best + 1) / samples;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > opt_tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return std::min({fc, fd, best_val});
}

double odd_k_gap_bound(int k) {
  if (k < 3 || k % 2 == 0) throw InputError("odd_k_gap_bound needs an odd k >= 3");
  const int nu = (k - 1) / 2;
  return 1.0 + std::cos(2.0 * std::numbers::pi * nu / (2.0 * nu + 1.0));
}

double appendix_d_bound(int r) {
  if (r < 2) throw InputError("appendix_d_bound needs r >= 2");
  const double t = 3.0 * std::ldexp(1.0, 2 * r - 1) - 1.0;
  return 1.0 / (48.0 * t * t);
}

double bipartite_cheeger(const Graph& g, std::size_t max_vertices) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("bipartite_cheeger needs a nonempty graph");
  if (n > max_vertices || n > 24)
    throw BudgetError("bipartite_cheeger enumeration capped at " + std::to_string(max_vertices) + " vertices");
  std::vector<std::uint32_t> nbr(n, 0);
  for (const auto& e : g.edges()) {
    nbr[e.u] |= 1U << e.v;
    nbr[e.v] |= 1U << e.u;
  }
  const std::uint32_t full = (n == 32) ? ~0U : ((1U << n) - 1);
  // Edges inside each subset.
  std::vector<std::uint16_t> inside(std::size_t{1} << n, 0);
  for (std::uint32_t T = 1; T <= full; ++T) {
    const int v = std::countr_zero(T);
    const std::uint32_t rest = T & (T - 1);
    inside[T] = static_cast<std::uint16_t>(inside[rest] + std::popcount(nbr[v] & rest));
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t S = 1; S <= full; ++S) {
    // e_min(S) = min over 2-colorings T | S\T of the monochromatic edges.
    int emin = inside[S];
    const std::uint32_t low = S & (~S + 1);  // fix one vertex's color to halve the work
    for (std::uint32_t T = S; T; T = (T - 1) & S) {
      if (!(T & low)) continue;
      emin = std::min(emin, inside[T] + inside[S ^ T]);
      if (emin == 0) break;
    }
    int degsum = 0;
    for (std::uint32_t X = S; X; X &= X - 1) degsum += std::popcount(nbr[std::countr_zero(X)]);
    const int cut = degsum - 2 * inside[S];
    best = std::min(best, static_cast<double>(emin + cut) / std::popcount(S));
  }
  return best;
}

int m_k(int k) {
  if (k < 1) throw InputError("m_k needs k >= 1");
  int a = 0, b = 0, k1 = k;
  while (k1 % 2 == 0) {
    k1 /= 2;
    ++a;
  }
  while (k1 % 3 == 0) {
    k1 /= 3;
    ++b;
  }
  if (a == 0) return b == 0 ? 12 * k : 4 * k;
  if (a == 1) return b == 0 ? 3 * k : k;
  return b == 0 ? 6 * k : 2 * k;
}

int band_count_bound(int k) {
  require_hyperbolic(k);
  return m_k(k) / 3;
}

std::vector<double> subdivision_spectrum_map(double ev, SubdivisionMap direction) {
  if (ev < -3.0 - 1e-9 || ev > 3.0 + 1e-9) throw InputError("layout eigenvalue outside [-3, 3]");
  // The square root amplifies rounding at the bipartite end -3, so snap to it.
  const double shifted = ev + 3.0 < 1e-10 ? 0.0 : ev + 3.0;
  if (direction == SubdivisionMap::to_S) return {-std::sqrt(shifted), std::sqrt(shifted)};
  const double root = std::sqrt(1.0 + 4.0 * shifted);
  return {(1.0 - root) / 2.0, (1.0 + root) / 2.0};
}

std::vector<double> subdivision_spectrum(const std::vector<double>& layout_spectrum, SubdivisionMap direction) {
  const std::size_t n = layout_spectrum.size();
  if (n % 2 != 0) throw InputError("a 3-regular graph has an even vertex count");
  std::vector<double> out;
  for (double e : layout_spectrum)
    for (double x : subdivision_spectrum_map(e, direction)) out.push_back(x);
  out.insert(out.end(), n / 2, 0.0);
  if (direction == SubdivisionMap::to_LS) out.insert(out.end(), n / 2, -2.0);
  std::sort(out.begin(), out.end());
  return out;
}

bool GapInterval::contains(double x) const {
  return std::any_of(components.begin(), components.end(),
                     [x](const auto& c) { return x > c.first && x < c.second; });
}

GapCatalog maximal_gap_intervals() {
  GapCatalog cat;
  const double r2 = std::sqrt(2.0);
  const double plus = std::sqrt(1.0 + 4.0 * (3.0 + 2.0 * r2));
  const double minus = std::sqrt(1.0 + 4.0 * (3.0 - 2.0 * r2));
  cat.b = (1.0 - plus) / 2.0;
  cat.b_prime = (1.0 + plus) / 2.0;
  cat.c = (1.0 + minus) / 2.0;
  cat.c_prime = (1.0 - minus) / 2.0;
  cat.mclaughlin = {"mclaughlin", {{-3.0, -2.0}, {-2.0, cat.b}, {cat.c_prime, 0.0}, {0.0, cat.c}, {cat.b_prime, 3.0}}};
  cat.ramanujan = {"ramanujan", {{-3.0, -2.0 * r2}, {2.0 * r2, 3.0}}};
  const double g = std::sqrt(5.0);
  cat.hoffman_planar = {"hoffman_planar", {{-3.0, -2.0}, {(1.0 - g) / 2.0, 0.0}, {0.0, (1.0 + g) / 2.0}}};
  return cat;
}

double GapFitModel::operator()(double r) const { return A + sign / (w + std::pow(r / s, p)); }

namespace {

// Parameters (A, w, log s, log p) keep s and p positive.
struct GapFunctor {
  using Scalar = double;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;

  const std::vector<double>& r;
  const std::vector<double>& y;
  int sign;

  int inputs() const { return 4; }
  int values() const { return static_cast<int>(r.size()); }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    const double s = std::exp(x[2]), p = std::exp(x[3]);
    for (std::size_t i = 0; i < r.size(); ++i)
      f[static_cast<Eigen::Index>(i)] = x[0] + sign / (x[1] + std::pow(r[i] / s, p)) - y[i];
    return 0;
  }

  int df(const Eigen::VectorXd& x, Eigen::MatrixXd& J) const {
    const double s = std::exp(x[2]), p = std::exp(x[3]);
    for (std::size_t i = 0; i < r.size(); ++i) {
      const auto row = static_cast<Eigen::Index>(i);
      const double t = std::pow(r[i] / s, p);
      const double den = x[1] + t;
      const double g = -sign / (den * den);
      J(row, 0) = 1.0;
      J(row, 1) = g;
      J(row, 2) = g * (-p * t);              // dt/dlog s
      J(row, 3) = g * t * std::log(r[i] / s) * p;  // dt/dlog p
    }
    return 0;
  }
};

}  // namespace

GapFitModel fit_gap_curve(const std::vector<double>& r, const std::vector<double>& values, int sign) {
  if (r.size() != values.size()) throw InputError("fit needs one value per radius");
  if (r.size() < 5) throw InputError("fit needs at least 5 points");
  if (sign != 1 && sign != -1) throw InputError("fit sign must be +1 or -1");
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!(r[i] > 0.0)) throw InputError("fit radii must be positive");
    if (i > 0 && !(r[i] > r[i - 1])) throw InputError("fit radii must be strictly increasing");
  }

  GapFunctor functor{r, values, sign};
  Eigen::VectorXd x(4);
  x << values.back(), 1.0, 0.0, std::log(1.4);
  Eigen::LevenbergMarquardt<GapFunctor> lm(functor);
  lm.parameters.ftol = 1e-15;
  lm.parameters.xtol = 1e-15;
  lm.parameters.maxfev = 20000;
  auto status = lm.minimize(x);
  if (status == Eigen::LevenbergMarquardtSpace::ImproperInputParameters ||
      status == Eigen::LevenbergMarquardtSpace::TooManyFunctionEvaluation || !x.allFinite()) {
    throw NumericError("gap fit did not converge", lm.fvec.norm());
  }

  GapFitModel m;
  m.A = x[0];
  m.w = x[1];
  m.s = std::exp(x[2]);
  m.p = std::exp(x[3]);
  m.sign = sign;
  m.n_points = r.size();
  Eigen::VectorXd f(static_cast<Eigen::Index>(r.size()));
  functor(x, f);
  m.rms = std::sqrt(f.squaredNorm() / static_cast<double>(r.size()));
  for (double ri : r)
    if (!(m.w + std::pow(ri / m.s, m.p) > 0.0)) throw NumericError("fitted model has a pole in the data range", m.rms);

  if (r.size() > 4) {
    Eigen::MatrixXd J(static_cast<Eigen::Index>(r.size()), 4);
    functor.df(x, J);
    // Back to (A, w, s, p): chain rule on the log parameters.
    J.col(2) /= m.s;
    J.col(3) /= m.p;
    Eigen::Matrix4d JtJ = J.transpose() * J;
    Eigen::FullPivLU<Eigen::Matrix4d> lu(JtJ);
    if (lu.isInvertible()) {
      const double sigma2 = f.squaredNorm() / static_cast<double>(r.size() - 4);
      m.covariance = lu.inverse() * sigma2;
    }
  }
  return m;
}

void write_fit_json(std::ostream& os, const GapFitModel& m) {
  nlohmann::ordered_json j;
  j["A"] = m.A;
  j["w"] = m.w;
  j["s"] = m.s;
  j["p"] = m.p;
  j["sign"] = m.sign > 0 ? "+" : "-";
  j["rms"] = m.rms;
  j["n_points"] = m.n_points;
  j["asymptotic_gap"] = m.asymptotic_gap();
  os << j.dump(2) << '\n';
}

RamanujanCheck is_ramanujan_layout(const Graph& g, std::size_t max_dense) {
  if (g.regular_degree() != 3) throw InputError("is_ramanujan_layout needs a 3-regular graph");
  if (!is_connected(g)) throw InputError("is_ramanujan_layout needs a connected graph");
  DenseOptions opts;
  opts.max_dim = max_dense;
  auto sr = dense_spectrum(signed_laplacian(g, LaplacianSign::minus), opts);
  RamanujanCheck out;
  out.lambda1 = sr.eigenvalues.at(1);
  out.ramanujan = out.lambda1 >= 3.0 - 2.0 * std::sqrt(2.0);
  return out;
}

void write_bounds_csv(std::ostream& os, int k_min, int k_max) {
  os << "k,cheeger_upper,paschke_lower,odd_k_bound,band_count_bound\n";
  for (int k = std::max(7, k_min); k <= k_max; ++k) {
    os << k << ',' << format_number(cheeger_upper_bound(k)) << ',' << format_number(paschke_lower_bound(k)) << ',';
    if (k % 2 == 1) os << format_number(odd_k_gap_bound(k));
    os << ',' << band_count_bound(k) << '\n';
  }
}

}  // namespace lgl
