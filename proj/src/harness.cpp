#include "mtc/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "mtc/transform.hpp"
#include "mtc/travelwave.hpp"

namespace mtc {

double l2_error(const SpectralField& Y,
                const std::function<double(double)>& exact, const BasisGrid& g,
                int refine) {
  if (refine < 2) throw ConfigError("l2_error: refine must be >= 2");
  const BasisGrid fine = make_grid(refine * g.p, g.ell);
  double acc = 0.0;
  for (int m = 0; m < fine.size(); ++m) {
    const double d = eval_expansion(Y, fine.nodes[m]) - exact(fine.nodes[m]);
    acc += fine.weights[m] * d * d;
  }
  return std::sqrt(acc);
}

double linf_error(const SpectralField& Y,
                  const std::function<double(double)>& exact,
                  const BasisGrid& g, int n_samples) {
  if (n_samples < 10 * g.p)
    throw ConfigError("linf_error: n_samples must be >= 10 p");
  const BasisGrid fine = make_grid(4 * g.p, g.ell);
  double mx = 0.0;
  for (int m = 0; m < fine.size(); ++m)
    mx = std::max(mx, std::abs(eval_expansion(Y, fine.nodes[m]) -
                               exact(fine.nodes[m])));
  const double L = 4.0 * g.ell;
  for (int i = 0; i < n_samples; ++i) {
    const double x = -L + 2.0 * L * i / (n_samples - 1.0);
    mx = std::max(mx, std::abs(eval_expansion(Y, x) - exact(x)));
  }
  return mx;
}

namespace {

struct ExampleSetup {
  ModelParams params;
  int p = 64;
  double ell = 8.0;
  double tau = 2e-2;
  double T = 2.0;
  std::shared_ptr<ExactSolution> exact;  // null for examples 5-6
  bool forced = false;
};

std::shared_ptr<ExactSolution> lorentzian_example(bool odd) {
  std::vector<LorentzianFamily::Bump> bumps = {
      {2.0, 1.0, -1.0, 1.0}, {1.0, 1.0, 1.0, -2.0}, {3.0, 2.0, 0.0, 0.0}};
  return std::make_shared<LorentzianFamily>(std::move(bumps), odd);
}

ExampleSetup example_setup(int id) {
  ExampleSetup s;
  switch (id) {
    case 1:
    case 2:
      s.params = {1.0, 1.0, 1.0, 1.0};
      s.exact = lorentzian_example(id == 2);
      s.forced = true;
      s.tau = 2e-2;
      s.T = 2.0;
      break;
    case 3:
      s.params = {0.0, 0.0, -1.0, -3.0};
      s.exact = std::make_shared<SolitonFamily>(
          std::vector<double>{1.5, 0.5}, std::vector<double>{-3.0, 0.0});
      s.tau = 1e-2;
      s.T = 5.0;
      break;
    case 4:
      s.params = {0.0, 0.0, -1.0, -3.0};
      s.exact = std::make_shared<SolitonFamily>(
          std::vector<double>{1.0, 1.0, 0.5},
          std::vector<double>{-4.0, -2.0, 0.0});
      s.tau = 1e-2;
      s.T = 5.0;
      break;
    case 5:
    case 6:
      s.params = {1.0, 0.0, 1.0, 1.0};  // beta filled in by the driver
      s.p = 2048;
      s.tau = 2e-2;
      s.T = 80.0;
      break;
    default:
      throw ConfigError("run_example: id must be 1..6");
  }
  return s;
}

RunResult run_wave_collision(int id, ExampleSetup s, const RunOverrides& ov,
                             const StepperConfig& cfg, int refine);

}  // namespace

RunResult run_example(int id, const RunOverrides& ov) {
  ExampleSetup s = example_setup(id);
  if (ov.p) s.p = *ov.p;
  if (ov.ell) s.ell = *ov.ell;
  if (ov.tau) s.tau = *ov.tau;
  if (ov.T) s.T = *ov.T;
  const int refine = ov.refine.value_or(4);

  StepperConfig cfg;
  cfg.tau = s.tau;
  cfg.T = s.T;
  if (ov.fp_tol) cfg.fp_tol = *ov.fp_tol;
  if (ov.fp_max_iters) cfg.fp_max_iters = *ov.fp_max_iters;
  cfg.snapshot_stride = ov.snapshot_stride.value_or(10);

  if (id >= 5) return run_wave_collision(id, s, ov, cfg, refine);

  RunResult res;
  res.params = s.params;
  res.grid = make_grid(s.p, s.ell);
  const BasisGrid& g = res.grid;

  SourceFn src = s.forced ? make_source(s.exact, s.params) : nullptr;
  BenjaminSystem sys = make_system(s.params, g, src);

  const auto exact0 = [&](double x) { return s.exact->value(x, 0.0); };
  SpectralField Y0 = interpolate(exact0, g);

  const auto t_start = std::chrono::steady_clock::now();
  const double H0 = hamiltonian(Y0, sys);
  double l2max = 0.0, linfmax = 0.0, hammax = 0.0;
  long obs_count = 0;

  Observer obs = [&](double t, const SpectralField& Y) {
    const auto exact_t = [&](double x) { return s.exact->value(x, t); };
    const double e2 = l2_error(Y, exact_t, g, refine);
    const double ei = linf_error(Y, exact_t, g, 10 * g.p);
    const double hd = std::abs(hamiltonian(Y, sys) - H0);
    l2max = std::max(l2max, e2);
    linfmax = std::max(linfmax, ei);
    hammax = std::max(hammax, hd);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t_start)
                          .count();
    res.per_time.rows.push_back({t, e2, ei, hd, res.stats.fp_iters_max, ms});
    if (obs_count % std::max(1, cfg.snapshot_stride) == 0)
      res.snapshots.emplace_back(t, Y);
    ++obs_count;
  };

  // Observe every step so the L-infinity-in-time norms are genuine maxima.
  StepperConfig obs_cfg = cfg;
  obs_cfg.snapshot_stride = 1;
  integrate(Y0, sys, obs_cfg, obs, &res.stats);

  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t_start)
                        .count();
  res.summary = {static_cast<double>(g.n()), l2max, linfmax, hammax,
                 res.stats.fp_iters_max, ms};
  return res;
}

namespace {

RunResult run_wave_collision(int id, ExampleSetup s, const RunOverrides& ov,
                             const StepperConfig& cfg, int /*refine*/) {
  const double c1 = (id == 5) ? 0.5 : 0.75;
  const double c2 = (id == 5) ? -0.5 : 0.1;
  const double shift1 = (id == 5) ? 20.0 : 30.0;
  const double shift2 = (id == 5) ? -20.0 : -4.0;
  const double sigma1 = 0.95;

  RunResult res;
  res.grid = make_grid(s.p, s.ell);
  const BasisGrid& g = res.grid;

  WaveProblem w1;
  w1.alpha = 1.0;
  w1.gamma = 1.0;
  w1.delta = 1.0;
  w1.c = c1;
  w1.sigma = sigma1;
  w1.grid = g;
  const double beta = w1.beta();
  WaveProblem w2 = w1;
  w2.c = c2;
  w2.sigma = beta / (2.0 * std::sqrt(w2.gamma * (w2.alpha - c2)));

  const SpectralField v1 = solve_wave(w1);
  const SpectralField v2 = solve_wave(w2);

  s.params.beta = beta;
  res.params = s.params;
  BenjaminSystem sys = make_system(s.params, g, nullptr);

  NodalField u0;
  u0.ell = g.ell;
  u0.values.resize(g.size());
  for (int m = 0; m < g.size(); ++m)
    u0.values[m] = eval_expansion(v1, g.nodes[m] + shift1) +
                   eval_expansion(v2, g.nodes[m] + shift2);
  SpectralField Y0 = forward(u0, g);

  const auto t_start = std::chrono::steady_clock::now();
  const double H0 = hamiltonian(Y0, sys);
  const double nan = std::nan("");
  double hammax = 0.0;

  Observer obs = [&](double t, const SpectralField& Y) {
    const double hd = std::abs(hamiltonian(Y, sys) - H0);
    hammax = std::max(hammax, hd);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t_start)
                          .count();
    res.per_time.rows.push_back({t, nan, nan, hd, res.stats.fp_iters_max, ms});
    res.snapshots.emplace_back(t, Y);
  };

  integrate(Y0, sys, cfg, obs, &res.stats);

  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t_start)
                        .count();
  res.summary = {static_cast<double>(g.n()), nan, nan, hammax,
                 res.stats.fp_iters_max, ms};
  return res;
}

}  // namespace

ErrorReport convergence_sweep(int id, const std::vector<int>& n_list,
                              double tau) {
  ErrorReport report;
  for (int n : n_list) {
    if (n < 1 || n % 2 == 0)
      throw ConfigError("convergence_sweep: n must be odd (n = 2p - 1)");
    RunOverrides ov;
    ov.p = (n + 1) / 2;
    if (tau > 0.0) ov.tau = tau;
    ov.snapshot_stride = 1 << 30;  // no snapshots during sweeps
    report.rows.push_back(run_example(id, ov).summary);
  }
  return report;
}

std::string report_to_csv(const ErrorReport& report) {
  std::string out =
      "t_or_n,l2_error,linf_error,hamiltonian_drift,fp_iters_max,wall_ms\n";
  char buf[256];
  for (const ErrorRow& r : report.rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%d,%.3f\n", r.key,
                  r.l2, r.linf, r.ham_drift, r.fp_iters_max, r.wall_ms);
    out += buf;
  }
  return out;
}

}  // namespace mtc
