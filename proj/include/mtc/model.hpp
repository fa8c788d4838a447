#pragma once

#include "mtc/operators.hpp"
#include "mtc/oracles.hpp"

#include <functional>
#include <memory>

// Assembly of the semi-discrete Benjamin system Y' = D Y + J F(Y) + S(t)
// and its conserved Hamiltonian.

namespace mtc {

// Physical-space forcing f(x, t); sampled at the nodes and transformed when
// a coefficient-space source is needed.
using SourceFn = std::function<double(double x, double t)>;

struct BenjaminSystem {
  ModelParams params;
  BasisGrid grid;
  BasisGrid source_grid;  // refined quadrature grid for the source projection
  OperatorBundle bundle;
  SourceFn source;  // may be empty

  // Coefficients of the source at time t (zero vector if absent).  Computed
  // by quadrature on source_grid and truncated to the resolved modes.
  Eigen::VectorXd source_coeffs(double t) const;
};

BenjaminSystem make_system(const ModelParams& params, const BasisGrid& grid,
                           SourceFn source = nullptr, int source_refine = 2);

// D Y + J F(Y) + S(t).
SpectralField rhs(const SpectralField& Y, double t, const BenjaminSystem& sys);

// Discrete Hamiltonian
//   G_n = 1/2 ( alpha <Y,Y> - beta <Y, H J Y> + gamma <J Y, J Y>
//               + (2 delta / 3) <Y, I_n[u^2]> ),
// evaluated in coefficient space (exact by basis orthonormality).
double hamiltonian(const SpectralField& Y, const BenjaminSystem& sys);

// Forcing f = u_t + alpha u_x - beta H[u_xx] - gamma u_xxx + delta (u^2)_x
// so that `exact` solves the augmented equation.  Requires a closed-form
// Hilbert transform whenever beta != 0.
SourceFn make_source(std::shared_ptr<const ExactSolution> exact,
                     const ModelParams& params);

}  // namespace mtc
