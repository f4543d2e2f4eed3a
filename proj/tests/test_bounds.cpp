#include <doctest.h>

#include <sstream>

#include "lgl/bounds.hpp"
#include "lgl/errors.hpp"
#include "lgl/generators.hpp"
#include "lgl/hamiltonian.hpp"
#include "lgl/lattice.hpp"
#include "lgl/spectral.hpp"
#include "oracles.hpp"

using namespace lgl;

TEST_CASE("cheeger upper bound") {
  CHECK(oracle::truncate3(cheeger_upper_bound(7)) == doctest::Approx(2.966).epsilon(1e-12));
  CHECK(oracle::truncate3(cheeger_upper_bound(8)) == doctest::Approx(2.943).epsilon(1e-12));
  double prev = cheeger_upper_bound(7);
  for (int k = 8; k <= 200; ++k) {
    const double v = cheeger_upper_bound(k);
    CHECK(v < prev);
    CHECK(v > 2.0 * std::sqrt(2.0));
    prev = v;
  }
  CHECK(cheeger_upper_bound(100000) - 2.0 * std::sqrt(2.0) < 1e-4);
}

TEST_CASE("paschke lower bound") {
  CHECK(oracle::truncate3(paschke_lower_bound(7)) == doctest::Approx(2.862).epsilon(1e-12));
  CHECK(oracle::truncate3(paschke_lower_bound(8)) == doctest::Approx(2.852).epsilon(1e-12));
  const double p20 = paschke_lower_bound(20);
  CHECK(p20 > 2.0 * std::sqrt(2.0));
  CHECK(p20 < cheeger_upper_bound(20));
  for (int k = 7; k <= 100; ++k) CHECK(paschke_lower_bound(k) < cheeger_upper_bound(k));

  // Brute-force bracketing of the minimizer on a fine grid.
  double best = INFINITY;
  for (int i = 1; i <= 200000; ++i) best = std::min(best, paschke_objective(7, i * 5e-5));
  CHECK(std::abs(best - paschke_lower_bound(7)) < 1e-7);
}

TEST_CASE("odd k gap bound") {
  CHECK(odd_k_gap_bound(3) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(odd_k_gap_bound(5) == doctest::Approx(1.0 + std::cos(4.0 * M_PI / 5.0)).epsilon(1e-14));
  CHECK(odd_k_gap_bound(7) == doctest::Approx(1.0 + std::cos(6.0 * M_PI / 7.0)).epsilon(1e-14));
  CHECK(odd_k_gap_bound(7) >= 1.0 / 49.0);
  CHECK_THROWS_AS(odd_k_gap_bound(8), InputError);
  // Half of lambda_min(D + A) = 2 + 2 cos(pi (k-1)/k) of the k-cycle.
  for (int k = 3; k <= 21; k += 2) {
    auto ev = oracle::eigenvalues(Eigen::MatrixXi(oracle::degree_matrix(cycle_graph(k)) + oracle::adjacency(cycle_graph(k))));
    CHECK(ev.front() == doctest::Approx(2.0 * odd_k_gap_bound(k)).epsilon(1e-12));
  }
}

TEST_CASE("appendix D bound") {
  CHECK(appendix_d_bound(2) == doctest::Approx(1.0 / 25392.0).epsilon(1e-14));
  for (int r = 2; r < 8; ++r) {
    CHECK(appendix_d_bound(r) > 0.0);
    CHECK(appendix_d_bound(r + 1) < appendix_d_bound(r));
  }
}

TEST_CASE("bipartite cheeger") {
  CHECK(bipartite_cheeger(cycle_graph(4)) == 0.0);
  CHECK(bipartite_cheeger(cycle_graph(5)) <= 0.2 + 1e-15);
  CHECK(bipartite_cheeger(complete_graph(4)) == doctest::Approx(oracle::bipartite_cheeger(complete_graph(4))));
  CHECK_THROWS_AS(bipartite_cheeger(cycle_graph(19)), BudgetError);

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_connected_graph(rng, 2 + rng() % 9, 0.3);
    const double f = bipartite_cheeger(g);
    CHECK(f == doctest::Approx(oracle::bipartite_cheeger(g)).epsilon(1e-14));
    const double lmin = oracle::eigenvalues(Eigen::MatrixXi(oracle::degree_matrix(g) + oracle::adjacency(g))).front();
    CHECK(f * f / (4.0 * g.max_degree()) <= lmin + 1e-9);
    CHECK(lmin <= 4.0 * f + 1e-9);
  }
}

TEST_CASE("m_k and band counts") {
  CHECK(band_count_bound(7) == 28);
  CHECK(band_count_bound(8) == 16);
  CHECK(band_count_bound(9) == 12);
  CHECK(band_count_bound(10) == 10);
  CHECK(band_count_bound(30) == 10);
  CHECK(m_k(11) == 132);
  CHECK(m_k(12) == 24);
  CHECK(m_k(14) == 42);
}

TEST_CASE("subdivision spectrum maps") {
  auto s = subdivision_spectrum_map(3.0, SubdivisionMap::to_S);
  CHECK(oracle::max_sorted_difference(s, {-std::sqrt(6.0), std::sqrt(6.0)}) < 1e-15);
  auto cat = maximal_gap_intervals();
  auto bottom = subdivision_spectrum_map(-2.0 * std::sqrt(2.0), SubdivisionMap::to_LS);
  CHECK(oracle::max_sorted_difference(bottom, {cat.c_prime, cat.c}) < 1e-14);
  auto top = subdivision_spectrum_map(2.0 * std::sqrt(2.0), SubdivisionMap::to_LS);
  CHECK(oracle::max_sorted_difference(top, {cat.b, cat.b_prime}) < 1e-14);

  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 50; ++trial) {
    auto x = oracle::random_cubic_graph(rng, 4 + 2 * (rng() % 9));
    auto ax = oracle::eigenvalues(oracle::adjacency(x));
    auto sx = subdivision_graph(x).graph;
    CHECK(oracle::max_sorted_difference(subdivision_spectrum(ax, SubdivisionMap::to_S),
                                        oracle::eigenvalues(oracle::adjacency(sx))) < 1e-9);
    CHECK(oracle::max_sorted_difference(subdivision_spectrum(ax, SubdivisionMap::to_LS),
                                        oracle::eigenvalues(oracle::adjacency(line_graph(sx).graph))) < 1e-9);
  }
}

TEST_CASE("gap interval catalog") {
  auto cat = maximal_gap_intervals();
  CHECK(oracle::truncate3(cat.b_prime) == doctest::Approx(2.965).epsilon(1e-12));
  CHECK(oracle::truncate3(-cat.b) == doctest::Approx(1.965).epsilon(1e-12));
  CHECK(oracle::truncate3(cat.c) == doctest::Approx(1.149).epsilon(1e-12));
  CHECK(oracle::truncate3(-cat.c_prime) == doctest::Approx(0.149).epsilon(1e-12));
  CHECK(cat.ramanujan.contains(2.9));
  CHECK(!cat.ramanujan.contains(2.8));
  CHECK(cat.hoffman_planar.contains(-0.5));
  CHECK(!cat.hoffman_planar.contains(0.0));
  CHECK(!cat.hoffman_planar.contains(-2.0));
  for (const auto* gi : {&cat.mclaughlin, &cat.ramanujan, &cat.hoffman_planar})
    for (std::size_t i = 0; i < gi->components.size(); ++i) {
      CHECK(gi->components[i].first < gi->components[i].second);
      CHECK(gi->components[i].first >= -3.0);
      CHECK(gi->components[i].second <= 3.0);
      if (i > 0) CHECK(gi->components[i - 1].second <= gi->components[i].first);
    }
  // Open components: endpoints and the flat band are excluded.
  CHECK(!cat.mclaughlin.contains(cat.b));
  CHECK(cat.mclaughlin.contains(cat.b - 1e-9));
  CHECK(!cat.mclaughlin.contains(-2.0));
}

TEST_CASE("gap curve fit") {
  GapFitModel truth;
  truth.A = -2.58;
  truth.w = 0.7;
  truth.s = 1.3;
  truth.p = 1.45;
  truth.sign = 1;
  std::vector<double> r, y;
  for (int i = 2; i <= 10; ++i) {
    r.push_back(i);
    y.push_back(truth(i));
  }
  auto fit = fit_gap_curve(r, y, 1);
  CHECK(fit.A == doctest::Approx(truth.A).epsilon(1e-6));
  CHECK(fit.w == doctest::Approx(truth.w).epsilon(1e-6));
  CHECK(fit.s == doctest::Approx(truth.s).epsilon(1e-6));
  CHECK(fit.p == doctest::Approx(truth.p).epsilon(1e-6));
  CHECK(fit.rms < 1e-10);
  CHECK(fit.asymptotic_gap() == doctest::Approx(3.0 - 2.58).epsilon(1e-6));
  CHECK_THROWS_AS(fit_gap_curve({1, 2, 3}, {1, 2, 3}, 1), InputError);
  CHECK_THROWS_AS(fit_gap_curve({1, 2, 2, 4, 5}, {1, 2, 3, 4, 5}, 1), InputError);

  std::ostringstream os;
  write_fit_json(os, fit);
  CHECK(os.str().find("\"asymptotic_gap\"") != std::string::npos);
}

TEST_CASE("ramanujan check") {
  auto c60 = is_ramanujan_layout(c60_graph());
  CHECK(c60.ramanujan);
  CHECK(c60.lambda1 > 3.0 - 2.0 * std::sqrt(2.0));
  CHECK(is_ramanujan_layout(complete_graph(4)).lambda1 == doctest::Approx(4.0));
  CHECK(!is_ramanujan_layout(euclidean_lattice(LatticeFamily::graphene, 12, 12, Boundary::torus).graph).ramanujan);
  CHECK_THROWS_AS(is_ramanujan_layout(cycle_graph(5)), InputError);
}

TEST_CASE("bounds table") {
  std::ostringstream os;
  write_bounds_csv(os, 7, 9);
  CHECK(os.str().rfind("k,cheeger_upper,paschke_lower,odd_k_bound,band_count_bound\n", 0) == 0);
}
