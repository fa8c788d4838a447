#pragma once

#include "mtc/model.hpp"

#include <array>
#include <stdexcept>

// 4-stage Gauss (Kuntzmann-Butcher) implicit Runge-Kutta method of order 8,
// with fixed-point stage iteration.  The Kronecker stage system
// (I - tau [A (x) D]) Z = R is solved by diagonalizing A over C, which
// decouples it into four complex banded systems of bandwidth bw(D).

namespace mtc {

struct IRKTableau {
  Eigen::Matrix4d A;
  Eigen::Vector4d b;
  Eigen::Vector4d c;
  // d = b^T A^{-1}; the update Y1 = Y + sum_i d_i (Z_i - Y) is algebraically
  // the full-stage-derivative update but avoids re-applying D, whose norm
  // grows like (n/ell)^3 and amplifies roundoff into an O(n^3 eps) per-step
  // error floor.
  Eigen::Vector4d d;
  // Extended-precision copies; the order-8 floor in double sits at the
  // roundoff of the coefficients themselves.
  std::array<std::array<long double, 4>, 4> A_l;
  std::array<long double, 4> b_l, c_l;
};

// Constructed from Gauss-Legendre nodes/weights by the collocation
// construction (the coefficients are nowhere transcribed from tables).
const IRKTableau& gauss4_tableau();

struct StepperConfig {
  double tau = 2e-2;
  double T = 1.0;
  double fp_tol = 1e-13;
  int fp_max_iters = 50;
  int snapshot_stride = 1;
};

struct StepFailure : std::runtime_error {
  StepFailure(double t, int iters, double residual)
      : std::runtime_error("IRK8 fixed-point iteration did not converge at t=" +
                           std::to_string(t) + " after " +
                           std::to_string(iters) +
                           " iterations (update norm " +
                           std::to_string(residual) + ")"),
        t(t),
        iters(iters),
        residual(residual) {}
  double t;
  int iters;
  double residual;
};

class StageSolver {
 public:
  StageSolver() = default;
  StageSolver(double tau, const Eigen::Matrix4d& A, const BandedMatrix& D);

  // Z and R hold the four stage vectors as columns.
  Eigen::MatrixXd solve(const Eigen::MatrixXd& R) const;

  double tau() const { return tau_; }

 private:
  double tau_ = 0.0;
  int n_ = 0;
  Eigen::Matrix4cd S_, Sinv_;
  std::array<ComplexBandedLU, 4> lu_;
};

StageSolver build_stage_solver(double tau, const Eigen::Matrix4d& A,
                               const BandedMatrix& D);

struct StepStats {
  int steps = 0;
  int fp_iters_max = 0;
  long fp_iters_total = 0;
};

// One IRK8 step of length tau from time t.  Returns Y1; reports the
// fixed-point iteration count through *iters when non-null.
SpectralField irk8_step(const SpectralField& Y, double t, double tau,
                        const BenjaminSystem& sys, const StageSolver& solver,
                        const StepperConfig& cfg, int* iters = nullptr);

using Observer = std::function<void(double t, const SpectralField& Y)>;

// Advance from t = 0 to t = cfg.T (final partial step permitted); invokes
// the observer at t = 0, every snapshot_stride steps, and at t = T.
SpectralField integrate(const SpectralField& Y0, const BenjaminSystem& sys,
                        const StepperConfig& cfg, Observer observer = nullptr,
                        StepStats* stats = nullptr);

}  // namespace mtc
