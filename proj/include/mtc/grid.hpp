#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>

// Rational spectral collocation on the real line with the
// Malmquist-Takenaka-Christov (MTC) basis.  The basis functions are
//
//   phi_{2k}(x)   = 2/sqrt(pi*ell) * sin((2k+1)theta/2) * sin(theta/2)
//   phi_{2k+1}(x) = 2/sqrt(pi*ell) * cos((2k+1)theta/2) * sin(theta/2)
//
// with x = (ell/2) cot(theta/2), theta in (0, 2pi).  They form a complete
// orthonormal basis of L^2(R).

namespace mtc {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Collocation geometry for a given (p, ell).  The truncation index is
// n = 2p - 1; there are 2p nodes.  Immutable after construction.
struct BasisGrid {
  int p = 0;
  double ell = 1.0;
  Eigen::VectorXd theta;    // theta_m = (2m+1)pi/(2p), strictly increasing
  Eigen::VectorXd nodes;    // x_m = (ell/2) cot(theta_m/2), strictly decreasing
  Eigen::VectorXd weights;  // w_m = pi/(4*ell*p) * (ell^2 + 4 x_m^2)

  int size() const { return 2 * p; }
  int n() const { return 2 * p - 1; }
};

// Vector of MTC coefficients (a_0 .. a_{2p-1}), interleaved even/odd indices.
struct SpectralField {
  Eigen::VectorXd coeffs;
  double ell = 1.0;
};

// Physical values at the collocation nodes.
struct NodalField {
  Eigen::VectorXd values;
  double ell = 1.0;
};

// Coefficients of the Benjamin equation
//   u_t = -alpha u_x + beta H[u_xx] + gamma u_xxx - delta (u^2)_x.
struct ModelParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

BasisGrid make_grid(int p, double ell);

// Branch-safe angle map, equals 2*arccot(2x/ell) in (0, 2pi).
double theta_of(double x, double ell);

// Evaluate a single basis function.  Defined for every integer index via the
// trigonometric closed form; negative indices satisfy
// phi_{-2k-2} = -phi_{2k} and phi_{-2k-1} = phi_{2k+1}.
double eval_phi(long k, double x, double ell);

// Dense evaluation of sum_k a_k phi_k(x), O(p) per point via the
// trigonometric recurrence in theta.
double eval_expansion(const SpectralField& field, double x);

}  // namespace mtc
