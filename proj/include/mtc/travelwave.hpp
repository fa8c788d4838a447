#pragma once

#include "mtc/operators.hpp"

#include <vector>

// Even traveling-wave profiles of the Benjamin equation by sigma-continuation
// with simplified Newton iterations on the discrete system
//   v + 2 sigma sqrt(gamma/(alpha-c)) H[J v] - gamma/(alpha-c) J^2 v
//     + delta/(alpha-c) I_n[v^2] = 0.

namespace mtc {

struct WaveProblem {
  double alpha = 1.0;
  double gamma = 1.0;  // > 0
  double delta = 1.0;  // > 0
  double c = 0.5;      // < alpha
  double sigma = 0.0;  // target, in [0, 1); beta = 2 sigma sqrt(gamma (alpha-c))
  int stages = 20;     // continuation grid size
  int newton_max_iters = 60;
  BasisGrid grid;

  double beta() const;
  void validate() const;
};

struct ContinuationFailure : std::runtime_error {
  ContinuationFailure(int stage, double sigma, std::vector<double> history)
      : std::runtime_error("traveling-wave continuation failed at stage " +
                           std::to_string(stage) + " (sigma=" +
                           std::to_string(sigma) + ")"),
        stage(stage),
        sigma(sigma),
        residual_history(std::move(history)) {}
  int stage;
  double sigma;
  std::vector<double> residual_history;
};

// Stopping threshold eps_n = 1e-12 sqrt(2(1-sigma)/n).
double wave_tolerance(double sigma, int n);

SpectralField wave_residual(const SpectralField& v, double sigma,
                            const WaveProblem& prob);

// Zero all odd-index coefficients (the phi_{2k+1} are odd functions).
SpectralField even_project(const SpectralField& a);

struct WaveDiagnostics {
  std::vector<double> sigmas;
  std::vector<int> newton_iters;
  std::vector<double> final_residuals;
  double residual = 0.0;  // at the target sigma
};

SpectralField solve_wave(const WaveProblem& prob,
                         WaveDiagnostics* diag = nullptr);

}  // namespace mtc
