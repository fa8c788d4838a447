#include "mtc/travelwave.hpp"

#include <cmath>

#include "mtc/oracles.hpp"
#include "mtc/transform.hpp"

namespace mtc {

double WaveProblem::beta() const {
  return 2.0 * sigma * std::sqrt(gamma * (alpha - c));
}

void WaveProblem::validate() const {
  if (!(gamma > 0.0)) throw ConfigError("WaveProblem: gamma must be > 0");
  if (!(delta > 0.0)) throw ConfigError("WaveProblem: delta must be > 0");
  if (!(c < alpha)) throw ConfigError("WaveProblem: requires c < alpha");
  if (!(sigma >= 0.0 && sigma < 1.0))
    throw ConfigError("WaveProblem: sigma must be in [0, 1)");
  if (grid.p < 1) throw ConfigError("WaveProblem: grid not initialized");
}

double wave_tolerance(double sigma, int n) {
  return 1e-12 * std::sqrt(2.0 * (1.0 - sigma) / n);
}

SpectralField wave_residual(const SpectralField& v, double sigma,
                            const WaveProblem& prob) {
  const double ac = prob.alpha - prob.c;
  const double c1 = 2.0 * sigma * std::sqrt(prob.gamma / ac);
  const double c2 = prob.gamma / ac;
  const double c3 = prob.delta / ac;
  const Eigen::VectorXd Jv = apply_J_vec(v.coeffs, prob.grid.ell);
  const Eigen::VectorXd J2v = apply_J_vec(Jv, prob.grid.ell);
  const SpectralField sq = nonlinearity(v, 1.0, prob.grid);
  return {v.coeffs + c1 * apply_H_vec(Jv) - c2 * J2v + c3 * sq.coeffs, v.ell};
}

SpectralField even_project(const SpectralField& a) {
  SpectralField out = a;
  for (int k = 1; k < out.coeffs.size(); k += 2) out.coeffs[k] = 0.0;
  return out;
}

namespace {

// Dense Jacobian of the residual restricted to the even subspace:
//   L w = w + c1 H J w - c2 J^2 w + 2 c3 I_n[v w].
Eigen::MatrixXd build_even_jacobian(const SpectralField& v, double sigma,
                                    const WaveProblem& prob) {
  const BasisGrid& g = prob.grid;
  const int p = g.p;
  const double ac = prob.alpha - prob.c;
  const double c1 = 2.0 * sigma * std::sqrt(prob.gamma / ac);
  const double c2 = prob.gamma / ac;
  const double c3 = prob.delta / ac;

  const NodalField vn = inverse(v, g);
  Eigen::MatrixXd L(p, p);
  const double amp = 2.0 / std::sqrt(M_PI * g.ell);
  Eigen::VectorXd col(2 * p), phi(2 * p);
  for (int j = 0; j < p; ++j) {
    col.setZero();
    col[2 * j] = 1.0;
    const Eigen::VectorXd Jw = apply_J_vec(col, g.ell);
    Eigen::VectorXd Lw =
        col + c1 * apply_H_vec(Jw) - c2 * apply_J_vec(Jw, g.ell);
    // product term: nodal values of phi_{2j} directly from the closed form
    for (int m = 0; m < 2 * p; ++m) {
      const double th = g.theta[m];
      phi[m] = amp * std::sin((2.0 * j + 1.0) * 0.5 * th) * std::sin(0.5 * th) *
               2.0 * c3 * vn.values[m];
    }
    Lw += forward({phi, g.ell}, g).coeffs;
    for (int i = 0; i < p; ++i) L(i, j) = Lw[2 * i];
  }
  return L;
}

// Simplified Newton at a fixed sigma: Jacobian assembled once, reused.
bool newton_stage(SpectralField& v, double sigma, const WaveProblem& prob,
                  std::vector<double>& history, int& iters_out) {
  const BasisGrid& g = prob.grid;
  const int p = g.p;
  const double eps = wave_tolerance(sigma, g.n());

  const Eigen::MatrixXd L = build_even_jacobian(v, sigma, prob);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(L);

  history.clear();
  int worse = 0;
  for (int it = 0; it < prob.newton_max_iters; ++it) {
    const SpectralField R = wave_residual(v, sigma, prob);
    const double rn = R.coeffs.norm();
    history.push_back(rn);
    if (rn <= eps) {
      iters_out = it;
      return true;
    }
    if (history.size() >= 2 && rn >= history[history.size() - 2]) {
      if (++worse >= 5) return false;
    } else {
      worse = 0;
    }
    Eigen::VectorXd re(p);
    for (int i = 0; i < p; ++i) re[i] = R.coeffs[2 * i];
    const Eigen::VectorXd dv = lu.solve(re);
    for (int i = 0; i < p; ++i) v.coeffs[2 * i] -= dv[i];
  }
  return false;
}

void advance(SpectralField& v, double sigma_to, const WaveProblem& prob,
             int stage, int depth, WaveDiagnostics* diag) {
  std::vector<double> history;
  int iters = 0;
  SpectralField trial = v;
  if (newton_stage(trial, sigma_to, prob, history, iters)) {
    v = trial;
    if (diag) {
      diag->sigmas.push_back(sigma_to);
      diag->newton_iters.push_back(iters);
      diag->final_residuals.push_back(history.empty() ? 0.0 : history.back());
    }
    return;
  }
  if (depth >= 6) throw ContinuationFailure(stage, sigma_to, history);
  // Refine the continuation step: go halfway first, then retry.
  const double sigma_from = diag && !diag->sigmas.empty() ? diag->sigmas.back() : 0.0;
  advance(v, 0.5 * (sigma_from + sigma_to), prob, stage, depth + 1, diag);
  advance(v, sigma_to, prob, stage, depth + 1, diag);
}

}  // namespace

SpectralField solve_wave(const WaveProblem& prob, WaveDiagnostics* diag) {
  prob.validate();
  const BasisGrid& g = prob.grid;

  SpectralField v = even_project(interpolate(
      [&](double x) {
        return sech2_seed(prob.alpha, prob.c, prob.gamma, prob.delta, x);
      },
      g));

  WaveDiagnostics local;
  WaveDiagnostics* d = diag ? diag : &local;

  // Stage 0 polishes the sech^2 seed at sigma = 0, then the continuation
  // grid climbs to the target.
  advance(v, 0.0, prob, 0, 0, d);
  const int N = std::max(1, prob.stages);
  for (int j = 1; j <= N && prob.sigma > 0.0; ++j)
    advance(v, prob.sigma * j / N, prob, j, 0, d);

  d->residual = wave_residual(v, prob.sigma, prob).coeffs.norm();
  return even_project(v);
}

}  // namespace mtc
