#include <doctest.h>

#include <cmath>
#include <vector>

#include "mtc/integrator.hpp"

using namespace mtc;

TEST_CASE("Gauss-4 tableau: frozen coefficients") {
  // [DERIVED] collocation construction from the Legendre-P4 roots, evaluated
  // in 40-digit arithmetic.
  const double A[4][4] = {
      {0.086963711284363464343, -0.026604180084998793313,
       0.012627462689404724515, -0.0035551496857956831569},
      {0.18811811749986807165, 0.16303628871563653566,
       -0.027880428602470895224, 0.0067355005945381555154},
      {0.16719192197418877317, 0.35395300603374396654, 0.16303628871563653566,
       -0.014190694931141142964},
      {0.17748257225452261184, 0.3134451147418683468, 0.35267675751627186463,
       0.086963711284363464343}};
  const double b[4] = {0.17392742256872692869, 0.32607257743127307131,
                       0.32607257743127307131, 0.17392742256872692869};
  const double c[4] = {0.069431844202973712388, 0.3300094782075718676,
                       0.6699905217924281324, 0.93056815579702628761};
  const double d[4] = {-1.6407053217392567182, 1.2143939697985776654,
                       -1.2143939697985776654, 1.6407053217392567182};
  const IRKTableau& t = gauss4_tableau();
  for (int i = 0; i < 4; ++i) {
    CHECK(t.b[i] == doctest::Approx(b[i]).epsilon(1e-15));
    CHECK(t.c[i] == doctest::Approx(c[i]).epsilon(1e-15));
    CHECK(t.d[i] == doctest::Approx(d[i]).epsilon(5e-15));
    for (int j = 0; j < 4; ++j)
      CHECK(t.A(i, j) == doctest::Approx(A[i][j]).epsilon(5e-15));
  }
}

TEST_CASE("tableau satisfies the order conditions B(8) and C(4)") {
  const IRKTableau& t = gauss4_tableau();
  for (int q = 1; q <= 8; ++q) {
    long double s = 0.0L;
    for (int i = 0; i < 4; ++i) s += t.b_l[i] * std::pow(t.c_l[i], q - 1);
    CHECK(std::abs((double)(s - 1.0L / q)) < 1e-17);
  }
  for (int i = 0; i < 4; ++i)
    for (int q = 1; q <= 4; ++q) {
      long double s = 0.0L;
      for (int j = 0; j < 4; ++j) s += t.A_l[i][j] * std::pow(t.c_l[j], q - 1);
      CHECK(std::abs((double)(s - std::pow(t.c_l[i], q) / q)) < 1e-17);
    }
}

TEST_CASE("tableau is symplectic: b_i A_ij + b_j A_ji - b_i b_j = 0") {
  const IRKTableau& t = gauss4_tableau();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double m = t.b[i] * t.A(i, j) + t.b[j] * t.A(j, i) - t.b[i] * t.b[j];
      CHECK(std::abs(m) < 1e-16);
    }
}

namespace {

// Scalar reference IRK8 in long double for y' = -sin(y), y(0) = 1
// (exact solution y(t) = 2 atan(tan(1/2) e^{-t})); stages by fixed-point
// iteration.
long double scalar_irk8(long double T, long double tau) {
  const IRKTableau& t = gauss4_tableau();
  long double y = 1.0L;
  const long n = std::lround((double)(T / tau));
  for (long k = 0; k < n; ++k) {
    long double Z[4] = {y, y, y, y};
    for (int it = 0; it < 200; ++it) {
      long double Zn[4];
      long double delta = 0.0L;
      for (int i = 0; i < 4; ++i) {
        long double s = y;
        for (int j = 0; j < 4; ++j) s += tau * t.A_l[i][j] * (-std::sin(Z[j]));
        Zn[i] = s;
        delta = std::max(delta, std::abs(Zn[i] - Z[i]));
      }
      for (int i = 0; i < 4; ++i) Z[i] = Zn[i];
      if (delta < 1e-21L) break;
    }
    for (int i = 0; i < 4; ++i) y += tau * t.b_l[i] * (-std::sin(Z[i]));
  }
  return y;
}

}  // namespace

TEST_CASE("scalar nonlinear ODE converges at order 8") {
  const long double T = 2.0L;
  const long double exact = 2.0L * std::atan(std::tan(0.5L) * std::exp(-T));
  std::vector<long double> errs;
  for (long double tau : {0.5L, 0.25L, 0.125L})
    errs.push_back(std::abs(scalar_irk8(T, tau) - exact));
  for (size_t k = 0; k + 1 < errs.size(); ++k) {
    const double slope = (double)(std::log(errs[k] / errs[k + 1]) / std::log(2.0L));
    CHECK(slope > 7.5);
    CHECK(slope < 8.5);
  }
}

TEST_CASE("one linear step at tau = 0.1, lambda = -1 is exact to 1e-12") {
  const IRKTableau& t = gauss4_tableau();
  const double tau = 0.1, lambda = -1.0;
  const Eigen::Matrix4d M =
      Eigen::Matrix4d::Identity() - tau * lambda * t.A;
  const Eigen::Vector4d Z = M.lu().solve(Eigen::Vector4d::Ones());
  const double y1 = 1.0 + tau * lambda * t.b.dot(Z);
  CHECK(std::abs(y1 - std::exp(lambda * tau)) < 1e-12);
}

TEST_CASE("skew linear flow preserves the quadratic invariant over 100 steps") {
  ModelParams prm{1.0, 1.0, 1.0, 0.0};  // delta = 0: purely linear, skew D
  const BasisGrid g = make_grid(16, 8.0);
  const BenjaminSystem sys = make_system(prm, g);
  SpectralField Y0;
  Y0.ell = g.ell;
  Y0.coeffs.resize(g.size());
  for (int k = 0; k < g.size(); ++k) Y0.coeffs[k] = std::cos(0.7 * k) / (1 + k);
  StepperConfig cfg;
  cfg.tau = 0.01;
  cfg.T = 1.0;  // 100 steps
  StepStats stats;
  const SpectralField Y = integrate(Y0, sys, cfg, nullptr, &stats);
  CHECK(stats.steps == 100);
  CHECK(std::abs(Y.coeffs.squaredNorm() - Y0.coeffs.squaredNorm()) <= 1e-10);
}

TEST_CASE("integrate handles T = 0, partial final steps, and bad configs") {
  ModelParams prm{1.0, 0.0, 1.0, 1.0};
  const BasisGrid g = make_grid(8, 8.0);
  const BenjaminSystem sys = make_system(prm, g);
  SpectralField Y0{Eigen::VectorXd::Constant(g.size(), 0.1), g.ell};

  StepperConfig cfg;
  cfg.tau = 0.02;
  cfg.T = 0.0;
  const SpectralField same = integrate(Y0, sys, cfg);
  CHECK((same.coeffs - Y0.coeffs).cwiseAbs().maxCoeff() == 0.0);

  cfg.T = 0.07;  // 3 full steps + a 0.01 remainder
  std::vector<double> times;
  integrate(Y0, sys, cfg,
            [&](double t, const SpectralField&) { times.push_back(t); });
  REQUIRE(times.size() == 5);
  CHECK(times.front() == 0.0);
  CHECK(times.back() == doctest::Approx(0.07).epsilon(1e-14));

  cfg.tau = -1.0;
  CHECK_THROWS_AS(integrate(Y0, sys, cfg), ConfigError);
  cfg.tau = 0.02;
  cfg.T = -1.0;
  CHECK_THROWS_AS(integrate(Y0, sys, cfg), ConfigError);
}

TEST_CASE("fixed-point failure raises StepFailure with context") {
  ModelParams prm{1.0, 1.0, 1.0, 1.0};
  const BasisGrid g = make_grid(16, 8.0);
  const BenjaminSystem sys = make_system(prm, g);
  SpectralField Y0{Eigen::VectorXd::Constant(g.size(), 0.5), g.ell};
  StepperConfig cfg;
  cfg.tau = 0.02;
  cfg.T = 0.02;
  cfg.fp_max_iters = 1;  // cannot converge in one sweep
  CHECK_THROWS_AS(integrate(Y0, sys, cfg), StepFailure);
}

TEST_CASE("StageSolver validates its input shape") {
  ModelParams prm{1.0, 1.0, 1.0, 1.0};
  const BasisGrid g = make_grid(6, 8.0);
  const OperatorBundle ob = build_D(prm, g);
  const StageSolver s(0.02, gauss4_tableau().A, ob.D);
  CHECK_THROWS_AS(s.solve(Eigen::MatrixXd::Zero(g.size(), 3)), DimensionError);
  CHECK_THROWS_AS(StageSolver(0.0, gauss4_tableau().A, ob.D),
                  std::invalid_argument);
}
