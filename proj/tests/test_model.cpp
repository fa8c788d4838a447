#include <doctest.h>

#include <cmath>
#include <memory>

#include "mtc/integrator.hpp"
#include "mtc/model.hpp"
#include "mtc/transform.hpp"

using namespace mtc;

TEST_CASE("hamiltonian matches its coefficient-space definition") {
  ModelParams prm{0.9, -0.4, 1.3, 0.7};
  const BasisGrid g = make_grid(12, 8.0);
  const BenjaminSystem sys = make_system(prm, g);
  SpectralField Y;
  Y.ell = g.ell;
  Y.coeffs.resize(g.size());
  for (int k = 0; k < g.size(); ++k) Y.coeffs[k] = std::sin(1.0 + 0.3 * k);

  const Eigen::VectorXd JY = apply_J_vec(Y.coeffs, g.ell);
  const Eigen::VectorXd HJY = apply_H_vec(JY);
  const SpectralField C = nonlinearity(Y, 1.0, g);
  const double ref =
      0.5 * (prm.alpha * Y.coeffs.squaredNorm() + prm.beta * Y.coeffs.dot(HJY) +
             prm.gamma * JY.squaredNorm() +
             2.0 * prm.delta / 3.0 * Y.coeffs.dot(C.coeffs));
  CHECK(hamiltonian(Y, sys) == doctest::Approx(ref).epsilon(1e-14));
}

TEST_CASE("hamiltonian quadratic part scales quadratically") {
  ModelParams prm{1.0, 0.5, 1.0, 0.0};  // delta = 0: purely quadratic
  const BasisGrid g = make_grid(10, 8.0);
  const BenjaminSystem sys = make_system(prm, g);
  SpectralField Y;
  Y.ell = g.ell;
  Y.coeffs = Eigen::VectorXd::LinSpaced(g.size(), -1.0, 1.0);
  const double h1 = hamiltonian(Y, sys);
  Y.coeffs *= 3.0;
  CHECK(hamiltonian(Y, sys) == doctest::Approx(9.0 * h1).epsilon(1e-13));
}

TEST_CASE("hamiltonian is conserved with beta and delta both active") {
  // The sign of the Hilbert term is only observable against the nonlinear
  // flow: for delta = 0 the Gauss stepper conserves every commuting
  // quadratic form, right sign or wrong.
  ModelParams prm{1.0, 1.0, 1.0, 1.0};
  const BasisGrid g = make_grid(64, 8.0);
  const BenjaminSystem sys = make_system(prm, g);
  const SpectralField Y0 =
      interpolate([](double x) { return 2.0 / (4.0 + x * x); }, g);
  StepperConfig cfg;
  cfg.tau = 0.02;
  cfg.T = 0.1;
  const SpectralField Y = integrate(Y0, sys, cfg);
  CHECK(std::abs(hamiltonian(Y, sys) - hamiltonian(Y0, sys)) < 1e-12);
}

TEST_CASE("manufactured source makes the exact solution a discrete near-solution") {
  // With S(t) built from the oracle, rhs evaluated on the interpolant of
  // u(., t) must approximate the coefficients of u_t spectrally well.
  ModelParams prm{1.0, 1.0, 1.0, 1.0};
  auto exact = std::make_shared<LorentzianFamily>(
      std::vector<LorentzianFamily::Bump>{
          {2.0, 1.0, -1.0, 1.0}, {1.0, 1.0, 1.0, -2.0}, {3.0, 2.0, 0.0, 0.0}},
      /*odd=*/false);
  const BasisGrid g = make_grid(64, 8.0);
  const BenjaminSystem sys = make_system(prm, g, make_source(exact, prm));
  const double t = 0.4;
  const SpectralField Y =
      interpolate([&](double x) { return exact->value(x, t); }, g);
  const SpectralField ut =
      interpolate([&](double x) { return exact->time_deriv(x, t); }, g);
  const SpectralField r = rhs(Y, t, sys);
  CHECK((r.coeffs - ut.coeffs).cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("make_source refuses beta != 0 without a Hilbert transform") {
  ModelParams prm{0.0, 1.0, -1.0, -3.0};
  auto sol = std::make_shared<SolitonFamily>(std::vector<double>{1.0},
                                             std::vector<double>{0.0});
  CHECK_THROWS_AS(make_source(sol, prm), std::invalid_argument);
  prm.beta = 0.0;
  CHECK_NOTHROW(make_source(sol, prm));
}

TEST_CASE("make_system validates source_refine and builds the refined grid") {
  ModelParams prm{1.0, 0.0, 1.0, 1.0};
  const BasisGrid g = make_grid(8, 8.0);
  CHECK_THROWS_AS(make_system(prm, g, nullptr, 0), ConfigError);
  const BenjaminSystem s1 = make_system(prm, g, nullptr, 1);
  CHECK(s1.source_grid.p == g.p);
  const BenjaminSystem s3 = make_system(prm, g, nullptr, 3);
  CHECK(s3.source_grid.p == 3 * g.p);
  CHECK(s3.source_grid.ell == g.ell);
}

TEST_CASE("source_coeffs is zero without a source and consistent with it") {
  ModelParams prm{1.0, 0.0, 1.0, 1.0};
  const BasisGrid g = make_grid(16, 8.0);
  const BenjaminSystem plain = make_system(prm, g);
  CHECK(plain.source_coeffs(0.3).cwiseAbs().maxCoeff() == 0.0);

  // For a source already resolved at p modes the refined projection and the
  // collocation interpolant agree to spectral accuracy.
  SourceFn f = [](double x, double t) { return (1.0 + t) / (9.0 + x * x); };
  const BenjaminSystem refined = make_system(prm, g, f, 4);
  const SpectralField direct =
      interpolate([&](double x) { return f(x, 0.5); }, g);
  CHECK((refined.source_coeffs(0.5) - direct.coeffs).cwiseAbs().maxCoeff() <
        1e-6);
}

TEST_CASE("rhs validates dimensions") {
  ModelParams prm{1.0, 0.0, 1.0, 1.0};
  const BasisGrid g = make_grid(8, 8.0);
  const BenjaminSystem sys = make_system(prm, g);
  SpectralField bad{Eigen::VectorXd::Zero(g.size() + 1), g.ell};
  CHECK_THROWS_AS(rhs(bad, 0.0, sys), DimensionError);
}
