#include "mtc/oracles.hpp"

#include <cmath>
#include <complex>
#include <cstring>
#include <stdexcept>

namespace mtc {

double ExactSolution::hilbert(double, double, int) const {
  throw std::logic_error("exact solution does not provide a Hilbert transform");
}

namespace {

// m-th s-derivative of 1/(s - i a).
std::complex<double> cauchy_deriv(double s, double a, int m) {
  const std::complex<double> w = 1.0 / std::complex<double>(s, -a);
  std::complex<double> r = w;
  double fac = 1.0;
  for (int j = 0; j < m; ++j) {
    fac *= -(j + 1.0);
    r *= w;
  }
  return fac * r;
}

}  // namespace

double LorentzianFamily::deriv(double x, double t, int order) const {
  if (order < 0 || order > 3)
    throw std::invalid_argument("LorentzianFamily: derivative order 0..3");
  double acc = 0.0;
  for (const Bump& b : bumps_) {
    const std::complex<double> w = cauchy_deriv(x - b.x0 - b.c * t, b.a, order);
    acc += odd_ ? b.r * w.real() : (b.r / b.a) * w.imag();
  }
  return acc;
}

double LorentzianFamily::hilbert(double x, double t, int order) const {
  if (order < 0 || order > 2)
    throw std::invalid_argument("LorentzianFamily: hilbert order 0..2");
  double acc = 0.0;
  for (const Bump& b : bumps_) {
    const std::complex<double> w = cauchy_deriv(x - b.x0 - b.c * t, b.a, order);
    // H[Im w] = Re w and H[Re w] = -Im w; H commutes with d/dx.
    acc += odd_ ? -b.r * w.imag() : (b.r / b.a) * w.real();
  }
  return acc;
}

double LorentzianFamily::time_deriv(double x, double t) const {
  double acc = 0.0;
  for (const Bump& b : bumps_) {
    const std::complex<double> w = cauchy_deriv(x - b.x0 - b.c * t, b.a, 1);
    const double dx1 = odd_ ? b.r * w.real() : (b.r / b.a) * w.imag();
    acc += -b.c * dx1;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Truncated bivariate Taylor (jet) arithmetic: orders <= 5 in x, <= 1 in t.
// Carries exact derivatives through det and log; no finite differences.

namespace {

constexpr int NX = 6;  // x-orders 0..5
constexpr int NT = 2;  // t-orders 0..1

struct Jet {
  double c[NX][NT];
  Jet() { std::memset(c, 0, sizeof c); }
  static Jet constant(double v) {
    Jet j;
    j.c[0][0] = v;
    return j;
  }
};

Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  for (int i = 0; i < NX; ++i)
    for (int j = 0; j < NT; ++j) r.c[i][j] = a.c[i][j] + b.c[i][j];
  return r;
}

Jet operator-(const Jet& a, const Jet& b) {
  Jet r;
  for (int i = 0; i < NX; ++i)
    for (int j = 0; j < NT; ++j) r.c[i][j] = a.c[i][j] - b.c[i][j];
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  for (int i1 = 0; i1 < NX; ++i1)
    for (int j1 = 0; j1 < NT; ++j1) {
      const double av = a.c[i1][j1];
      if (av == 0.0) continue;
      for (int i2 = 0; i1 + i2 < NX; ++i2)
        for (int j2 = 0; j1 + j2 < NT; ++j2)
          r.c[i1 + i2][j1 + j2] += av * b.c[i2][j2];
    }
  return r;
}

Jet operator*(double s, const Jet& a) {
  Jet r;
  for (int i = 0; i < NX; ++i)
    for (int j = 0; j < NT; ++j) r.c[i][j] = s * a.c[i][j];
  return r;
}

// Power series sum_{k>=1} coef(k) g^k for a jet g with zero constant term;
// total degree caps the needed powers at NX - 1 + NT - 1.
template <typename Coef>
Jet nilpotent_series(const Jet& g, Coef coef) {
  Jet acc;
  Jet pw = g;
  for (int k = 1; k <= (NX - 1) + (NT - 1); ++k) {
    acc = acc + coef(k) * pw;
    pw = pw * g;
  }
  return acc;
}

Jet inverse(const Jet& b) {
  const double b0 = b.c[0][0];
  if (b0 == 0.0) throw std::domain_error("Jet: division by zero constant term");
  Jet g = (1.0 / b0) * b;
  g.c[0][0] = 0.0;
  Jet r = nilpotent_series(g, [](int k) { return (k % 2) ? -1.0 : 1.0; });
  r.c[0][0] += 1.0;
  return (1.0 / b0) * r;
}

Jet operator/(const Jet& a, const Jet& b) { return a * inverse(b); }

Jet log(const Jet& f) {
  const double f0 = f.c[0][0];
  if (f0 <= 0.0) throw std::domain_error("Jet: log of non-positive value");
  Jet g = (1.0 / f0) * f;
  g.c[0][0] = 0.0;
  Jet r =
      nilpotent_series(g, [](int k) { return ((k % 2) ? 1.0 : -1.0) / k; });
  r.c[0][0] = std::log(f0);
  return r;
}

// log det of an N x N jet matrix via Gaussian elimination.
Jet log_det(std::vector<Jet>& m, int n) {
  Jet acc;
  for (int k = 0; k < n; ++k) {
    Jet& piv = m[k * n + k];
    if (piv.c[0][0] <= 0.0)
      throw std::domain_error("SolitonFamily: non-positive pivot in det");
    acc = acc + log(piv);
    for (int i = k + 1; i < n; ++i) {
      const Jet f = m[i * n + k] / piv;
      for (int j = k; j < n; ++j) m[i * n + j] = m[i * n + j] - f * m[k * n + j];
    }
  }
  return acc;
}

}  // namespace

SolitonFamily::SolitonFamily(std::vector<double> velocities,
                             std::vector<double> phases) {
  if (velocities.size() != phases.size())
    throw std::invalid_argument("SolitonFamily: size mismatch");
  for (size_t i = 0; i < velocities.size(); ++i) {
    if (!(velocities[i] > 0.0))
      throw std::invalid_argument("SolitonFamily: velocities must be positive");
    const double lam = 0.5 * std::sqrt(velocities[i]);
    const double b = 2.0 * lam * std::exp(2.0 * phases[i] * lam);
    // Equal eigenvalues make rows of A proportional and every principal minor
    // is linear in each b_i, so coincident-velocity entries collapse exactly
    // into a single term with the amplitudes summed.  (Without the merge the
    // elimination pivots degenerate.)
    bool merged = false;
    for (size_t j = 0; j < lambda_.size(); ++j)
      if (std::abs(lambda_[j] - lam) <= 1e-12 * lam) {
        b_[j] += b;
        merged = true;
        break;
      }
    if (!merged) {
      lambda_.push_back(lam);
      b_.push_back(b);
    }
  }
}

void SolitonFamily::jets(double x, double t, double out[4][2]) const {
  const int n = size();

  // Far behind the waves every exponent is huge and exp overflows; there the
  // field itself is far below double precision (it decays like
  // exp(-2 lambda_min dist)), so the zero asymptote is exact to roundoff.
  double eta_max = -INFINITY;
  for (int i = 0; i < n; ++i)
    eta_max = std::max(eta_max, std::log(b_[i]) +
                                    8.0 * std::pow(lambda_[i], 3) * t -
                                    2.0 * lambda_[i] * x);
  if (eta_max > 500.0) {
    std::memset(out, 0, sizeof(double) * 8);
    return;
  }

  std::vector<Jet> m(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double mu = lambda_[i] + lambda_[j];
      const double base =
          b_[i] * std::exp(8.0 * std::pow(lambda_[i], 3) * t - mu * x) / mu;
      Jet e;
      double xf = 1.0;  // (-mu)^k / k!
      for (int k = 0; k < NX; ++k) {
        e.c[k][0] = base * xf;
        e.c[k][1] = base * xf * 8.0 * std::pow(lambda_[i], 3);
        xf *= -mu / (k + 1.0);
      }
      if (i == j) e.c[0][0] += 1.0;  // I + A
      m[static_cast<size_t>(i) * n + j] = e;
    }
  const Jet F = log_det(m, n);
  // u = -2 d^2/dx^2 ln det; Taylor coefficient -> derivative via factorials.
  double fact = 2.0;  // (i+2)! starting at i = 0
  for (int i = 0; i <= 3; ++i) {
    out[i][0] = -2.0 * fact * F.c[i + 2][0];
    out[i][1] = -2.0 * fact * F.c[i + 2][1];
    fact *= (i + 3.0);
  }
}

double SolitonFamily::value(double x, double t) const {
  double d[4][2];
  jets(x, t, d);
  return d[0][0];
}

double SolitonFamily::deriv(double x, double t, int order) const {
  if (order < 0 || order > 3)
    throw std::invalid_argument("SolitonFamily: derivative order 0..3");
  double d[4][2];
  jets(x, t, d);
  return d[order][0];
}

double SolitonFamily::time_deriv(double x, double t) const {
  double d[4][2];
  jets(x, t, d);
  return d[0][1];
}

double sech2_seed(double alpha, double c, double gamma, double delta,
                  double x) {
  if (!(gamma > 0.0)) throw std::domain_error("sech2_seed: gamma must be > 0");
  if (!(alpha - c > 0.0))
    throw std::domain_error("sech2_seed: requires c < alpha");
  if (delta == 0.0) throw std::domain_error("sech2_seed: delta must be nonzero");
  const double s = 1.0 / std::cosh(std::sqrt((alpha - c) / (4.0 * gamma)) * x);
  return -3.0 * (alpha - c) / (2.0 * delta) * s * s;
}

}  // namespace mtc
