#include "mtc/grid.hpp"

#include <cmath>
#include <complex>

namespace mtc {

BasisGrid make_grid(int p, double ell) {
  if (p < 1) throw ConfigError("make_grid: p must be >= 1");
  if (!(ell > 0.0)) throw ConfigError("make_grid: ell must be > 0");

  BasisGrid g;
  g.p = p;
  g.ell = ell;
  const int np = 2 * p;
  g.theta.resize(np);
  g.nodes.resize(np);
  g.weights.resize(np);

  const double pi = M_PI;
  for (int m = 0; m < np; ++m) g.theta[m] = (2.0 * m + 1.0) * pi / (2.0 * p);

  // Mirrored halves keep the antisymmetry x_m = -x_{2p-1-m} bit-exact.
  for (int m = 0; m < p; ++m) {
    const double half = 0.5 * g.theta[m];
    const double x = 0.5 * ell * std::cos(half) / std::sin(half);
    g.nodes[m] = x;
    g.nodes[np - 1 - m] = -x;
    const double w = pi / (4.0 * ell * p) * (ell * ell + 4.0 * x * x);
    g.weights[m] = w;
    g.weights[np - 1 - m] = w;
  }
  return g;
}

double theta_of(double x, double ell) {
  // atan2(ell, 2x) in (0, pi); doubling lands in (0, 2pi).
  return 2.0 * std::atan2(ell, 2.0 * x);
}

double eval_phi(long k, double x, double ell) {
  const double theta = theta_of(x, ell);
  const double s = std::sin(0.5 * theta);
  const double amp = 2.0 / std::sqrt(M_PI * ell) * s;
  // Even index 2j -> sin((2j+1)theta/2); odd index 2j+1 -> cos((2j+1)theta/2).
  // The formulas extend to negative indices unchanged.
  long j = (k >= 0) ? k / 2 : -((-k + 1) / 2);  // floor division by 2
  const bool odd = (k - 2 * j) != 0;
  const double arg = (2.0 * j + 1.0) * 0.5 * theta;
  return amp * (odd ? std::cos(arg) : std::sin(arg));
}

double eval_expansion(const SpectralField& field, double x) {
  const double ell = field.ell;
  const int n = static_cast<int>(field.coeffs.size());
  const double theta = theta_of(x, ell);
  const double s = std::sin(0.5 * theta);
  const double amp = 2.0 / std::sqrt(M_PI * ell) * s;

  // e^{i(2k+1)theta/2} by complex recurrence.
  const std::complex<double> step(std::cos(theta), std::sin(theta));
  std::complex<double> w(std::cos(0.5 * theta), std::sin(0.5 * theta));
  double acc = 0.0;
  for (int k = 0; 2 * k < n; ++k) {
    acc += field.coeffs[2 * k] * w.imag();
    if (2 * k + 1 < n) acc += field.coeffs[2 * k + 1] * w.real();
    w *= step;
  }
  return amp * acc;
}

}  // namespace mtc
