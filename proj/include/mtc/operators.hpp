#pragma once

#include "mtc/banded.hpp"
#include "mtc/grid.hpp"

// Coefficient-space linear operators of the semi-discretization:
//   J = -P_n d/dx P_n   (skew, banded, bandwidth 3 in interleaved ordering)
//   H = even/odd index swap (exact discrete Hilbert transform, H^2 = -I)
//   D = alpha J + beta H J^2 - gamma J^3   (skew, bandwidth <= 7)
// and the collocation nonlinearity F(Y) = delta * I_n[u^2] in coefficients.

namespace mtc {

SpectralField apply_J(const SpectralField& a, const BasisGrid& g);
SpectralField apply_H(const SpectralField& a);

// In-place kernels on raw coefficient vectors.
Eigen::VectorXd apply_J_vec(const Eigen::VectorXd& a, double ell);
Eigen::VectorXd apply_H_vec(const Eigen::VectorXd& a);

BandedMatrix build_J(int p, double ell);
BandedMatrix build_H(int p);

struct OperatorBundle {
  int p = 0;
  double ell = 1.0;
  ModelParams params;
  BandedMatrix J;  // bandwidth 3
  BandedMatrix D;  // alpha J + beta H J^2 - gamma J^3, bandwidth <= 7
};

OperatorBundle build_D(const ModelParams& params, const BasisGrid& g);

// Coefficients of delta * I_n[u^2]: inverse transform, square nodal values,
// scale, forward transform.  O(p log p).
SpectralField nonlinearity(const SpectralField& a, double delta,
                           const BasisGrid& g);

}  // namespace mtc
