#include <doctest.h>

#include <cmath>

#include "mtc/oracles.hpp"
#include "mtc/transform.hpp"
#include "mtc/travelwave.hpp"

using namespace mtc;

TEST_CASE("wave_tolerance formula") {
  CHECK(wave_tolerance(0.0, 127) ==
        doctest::Approx(1e-12 * std::sqrt(2.0 / 127.0)).epsilon(1e-15));
  CHECK(wave_tolerance(0.95, 4095) ==
        doctest::Approx(1e-12 * std::sqrt(2.0 * 0.05 / 4095.0)).epsilon(1e-15));
}

TEST_CASE("beta follows from sigma: frozen value") {
  // [DERIVED] beta = 2 sigma sqrt(gamma (alpha - c)) at sigma = 0.95,
  // alpha = gamma = 1, c = 1/2.
  WaveProblem prob;
  prob.alpha = 1.0;
  prob.gamma = 1.0;
  prob.delta = 1.0;
  prob.c = 0.5;
  prob.sigma = 0.95;
  CHECK(prob.beta() == doctest::Approx(1.3435028842544403).epsilon(1e-14));
  prob.sigma = 0.0;
  CHECK(prob.beta() == 0.0);
}

TEST_CASE("WaveProblem validation") {
  WaveProblem prob;
  prob.grid = make_grid(8, 8.0);
  CHECK_NOTHROW(prob.validate());
  auto bad = prob;
  bad.gamma = 0.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = prob;
  bad.delta = -1.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = prob;
  bad.c = 1.5;  // >= alpha
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = prob;
  bad.sigma = 1.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = prob;
  bad.grid = BasisGrid{};
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("even_project zeroes the odd-index coefficients") {
  SpectralField a{Eigen::VectorXd::LinSpaced(10, 1.0, 10.0), 8.0};
  const SpectralField e = even_project(a);
  for (int k = 0; k < 10; ++k)
    CHECK(e.coeffs[k] == (k % 2 == 0 ? a.coeffs[k] : 0.0));
}

TEST_CASE("sech^2 seed nearly solves the sigma = 0 equation") {
  WaveProblem prob;
  prob.c = 0.5;
  prob.sigma = 0.0;
  prob.grid = make_grid(128, 8.0);
  const SpectralField v = even_project(interpolate(
      [&](double x) {
        return sech2_seed(prob.alpha, prob.c, prob.gamma, prob.delta, x);
      },
      prob.grid));
  const double rn = wave_residual(v, 0.0, prob).coeffs.norm();
  // Interpolation of the exact profile: small but above the Newton target.
  CHECK(rn < 1e-6);
}

TEST_CASE("solve_wave reaches the stopping tolerance at sigma = 0") {
  WaveProblem prob;
  prob.c = 0.5;
  prob.sigma = 0.0;
  prob.grid = make_grid(96, 8.0);
  WaveDiagnostics diag;
  const SpectralField v = solve_wave(prob, &diag);
  CHECK(diag.residual <= wave_tolerance(0.0, prob.grid.n()));
  for (int k = 1; k < v.coeffs.size(); k += 2) CHECK(v.coeffs[k] == 0.0);
  // The polished profile stays close to the sech^2 seed.
  const double mid = eval_expansion(v, 0.0);
  CHECK(mid == doctest::Approx(sech2_seed(1.0, 0.5, 1.0, 1.0, 0.0)).epsilon(1e-6));
}

TEST_CASE("solve_wave continuation to sigma = 0.5 at moderate resolution") {
  WaveProblem prob;
  prob.c = 0.5;
  prob.sigma = 0.5;
  prob.stages = 10;
  prob.grid = make_grid(128, 8.0);
  WaveDiagnostics diag;
  const SpectralField v = solve_wave(prob, &diag);
  CHECK(diag.residual <= wave_tolerance(prob.sigma, prob.grid.n()));
  CHECK(diag.sigmas.size() >= 11);  // stage 0 plus ten continuation stages
  CHECK(diag.sigmas.back() == doctest::Approx(0.5).epsilon(1e-14));
  // Residual recomputed independently agrees with the diagnostic.
  const double rn = wave_residual(v, prob.sigma, prob).coeffs.norm();
  CHECK(rn == doctest::Approx(diag.residual).epsilon(1e-6));
  // The profile is even, negative at the origin, and decays.
  CHECK(eval_expansion(v, 0.0) < 0.0);
  CHECK(eval_expansion(v, 1.7) ==
        doctest::Approx(eval_expansion(v, -1.7)).epsilon(1e-9));
  CHECK(std::abs(eval_expansion(v, 60.0)) < 1e-3);
}

TEST_CASE("solve_wave rejects invalid problems") {
  WaveProblem prob;
  prob.grid = make_grid(16, 8.0);
  prob.c = 2.0;  // >= alpha
  CHECK_THROWS_AS(solve_wave(prob), ConfigError);
}
