#pragma once

#include <optional>
#include <vector>

// Closed-form reference solutions used for manufactured-source runs and
// error measurement: Lorentzian bump families, KdV N-solitons via the
// log-determinant formula, and the sech^2 traveling-wave seed.

namespace mtc {

// Common surface for manufactured-source construction.  Spatial derivatives
// up to order 3 are required; the Hilbert transform of u_xx is optional
// (solitons do not provide one; they are only used with beta = 0).
class ExactSolution {
 public:
  virtual ~ExactSolution() = default;
  virtual double value(double x, double t) const = 0;
  virtual double deriv(double x, double t, int order) const = 0;  // d^order/dx^order
  virtual double time_deriv(double x, double t) const = 0;
  virtual bool has_hilbert() const { return false; }
  virtual double hilbert(double x, double t, int order) const;  // H[d^order u]
};

// Sum of moving Lorentzian bumps.  Even bumps r/(a^2+s^2) or odd bumps
// r*s/(a^2+s^2), s = x - x0 - c*t.  All derivatives and Hilbert transforms
// are exact rational expressions obtained from powers of 1/(s - i a).
//
// Sign convention: with the Hilbert kernel that maps phi_{2k} to phi_{2k+1},
// H[a/(a^2+s^2)] = +s/(a^2+s^2).  Fixed once against an FFT oracle and
// pinned by a regression test.
class LorentzianFamily : public ExactSolution {
 public:
  struct Bump {
    double r, a, x0, c;
  };

  LorentzianFamily(std::vector<Bump> bumps, bool odd)
      : bumps_(std::move(bumps)), odd_(odd) {}

  double value(double x, double t) const override { return deriv(x, t, 0); }
  double deriv(double x, double t, int order) const override;
  double time_deriv(double x, double t) const override;
  bool has_hilbert() const override { return true; }
  double hilbert(double x, double t, int order) const override;

  const std::vector<Bump>& bumps() const { return bumps_; }
  bool odd() const { return odd_; }

 private:
  std::vector<Bump> bumps_;
  bool odd_;
};

// KdV N-soliton for u_t = -gamma u_xxx + ... with alpha = beta = 0,
// gamma = -1, delta = -3:
//   u(x, t) = -2 d^2/dx^2 ln det(I + A(x, t)),
//   A_ij = b_i e^{8 lambda_i^3 t} e^{-(lambda_i+lambda_j)x}/(lambda_i+lambda_j),
//   lambda_i = sqrt(v_i)/2,  b_i = 2 lambda_i e^{2 phi_i lambda_i}.
// Derivatives are computed analytically via truncated Taylor (jet)
// arithmetic through the determinant, never by finite differences.
class SolitonFamily : public ExactSolution {
 public:
  SolitonFamily(std::vector<double> velocities, std::vector<double> phases);

  double value(double x, double t) const override;
  double deriv(double x, double t, int order) const override;  // order <= 3
  double time_deriv(double x, double t) const override;

  int size() const { return static_cast<int>(lambda_.size()); }

 private:
  // Taylor coefficients of u around (x, t): d[i][j] ~ dx^i dt^j, i<=3, j<=1.
  void jets(double x, double t, double out[4][2]) const;
  std::vector<double> lambda_, b_;
};

// v0(x) = -3(alpha-c)/(2 delta) * sech(sqrt((alpha-c)/(4 gamma)) x)^2,
// the exact sigma = 0 traveling-wave profile.
double sech2_seed(double alpha, double c, double gamma, double delta, double x);

}  // namespace mtc
