#include <doctest.h>

#include <cmath>
#include <random>

#include "mtc/transform.hpp"

using namespace mtc;

namespace {

NodalField random_nodal(const BasisGrid& g, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  NodalField v;
  v.ell = g.ell;
  v.values.resize(g.size());
  for (int m = 0; m < g.size(); ++m) v.values[m] = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("fast forward matches the naive quadrature") {
  for (int p : {1, 2, 3, 5, 8, 13, 32, 65}) {
    const BasisGrid g = make_grid(p, 8.0);
    const NodalField v = random_nodal(g, 1234u + p);
    const SpectralField af = forward(v, g);
    const SpectralField an = forward_naive(v, g);
    REQUIRE(af.coeffs.size() == g.size());
    CHECK((af.coeffs - an.coeffs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("fast inverse matches the naive expansion") {
  for (int p : {1, 2, 3, 5, 8, 13, 32, 65}) {
    const BasisGrid g = make_grid(p, 3.5);
    std::mt19937 rng(777u + p);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    SpectralField a;
    a.ell = g.ell;
    a.coeffs.resize(g.size());
    for (int k = 0; k < g.size(); ++k) a.coeffs[k] = dist(rng);
    const NodalField uf = inverse(a, g);
    const NodalField un = inverse_naive(a, g);
    CHECK((uf.values - un.values).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("forward/inverse roundtrip is the identity on nodal data") {
  for (int p : {2, 7, 64}) {
    const BasisGrid g = make_grid(p, 8.0);
    const NodalField v = random_nodal(g, 99u + p);
    const NodalField w = inverse(forward(v, g), g);
    CHECK((w.values - v.values).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("inverse/forward roundtrip is the identity on coefficients") {
  const BasisGrid g = make_grid(24, 8.0);
  std::mt19937 rng(5u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  SpectralField a;
  a.ell = g.ell;
  a.coeffs.resize(g.size());
  for (int k = 0; k < g.size(); ++k) a.coeffs[k] = dist(rng);
  const SpectralField b = forward(inverse(a, g), g);
  CHECK((b.coeffs - a.coeffs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("frozen coefficients of 1/(1+x^2) for p=4, ell=8") {
  // [DERIVED] forward quadrature evaluated in 40-digit arithmetic; the odd
  // coefficients vanish because the function is even.
  const BasisGrid g = make_grid(4, 8.0);
  const SpectralField a =
      interpolate([](double x) { return 1.0 / (1.0 + x * x); }, g);
  CHECK(a.coeffs[0] == doctest::Approx(0.95848462895937377527).epsilon(1e-13));
  CHECK(a.coeffs[2] == doctest::Approx(-0.54564632344693998137).epsilon(1e-13));
  CHECK(a.coeffs[4] == doctest::Approx(0.27831370418702351583).epsilon(1e-13));
  CHECK(a.coeffs[6] == doctest::Approx(-0.085198072710313321171).epsilon(1e-12));
  for (int k = 1; k < g.size(); k += 2) CHECK(std::abs(a.coeffs[k]) < 1e-14);
  // Off-node evaluation of the truncated expansion.
  CHECK(eval_expansion(a, 2.0) ==
        doctest::Approx(0.24298943064458465303).epsilon(1e-13));
}

TEST_CASE("interpolate reproduces the sampled function at every node") {
  const BasisGrid g = make_grid(48, 8.0);
  auto f = [](double x) { return std::exp(-0.1 * x * x) + x / (4.0 + x * x); };
  const SpectralField a = interpolate(f, g);
  for (int m = 0; m < g.size(); ++m)
    CHECK(eval_expansion(a, g.nodes[m]) ==
          doctest::Approx(f(g.nodes[m])).epsilon(1e-11));
}

TEST_CASE("spectral accuracy on a smooth rational target") {
  // phi-expansions of rational functions with poles off the real axis
  // converge geometrically; p=48 already resolves this one to ~1e-12.
  const BasisGrid g = make_grid(48, 8.0);
  auto f = [](double x) { return (2.0 + x) / (9.0 + x * x); };
  const SpectralField a = interpolate(f, g);
  double worst = 0.0;
  for (double x = -30.0; x <= 30.0; x += 0.37)
    worst = std::max(worst, std::abs(eval_expansion(a, x) - f(x)));
  CHECK(worst < 1e-10);
}

TEST_CASE("transforms reject mismatched sizes") {
  const BasisGrid g = make_grid(8, 8.0);
  NodalField v;
  v.ell = g.ell;
  v.values = Eigen::VectorXd::Zero(g.size() + 2);
  CHECK_THROWS_AS(forward(v, g), DimensionError);
  SpectralField a;
  a.ell = g.ell;
  a.coeffs = Eigen::VectorXd::Zero(g.size() - 1);
  CHECK_THROWS_AS(inverse(a, g), DimensionError);
}
