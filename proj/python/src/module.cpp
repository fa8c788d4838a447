#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mtc/harness.hpp"
#include "mtc/transform.hpp"
#include "mtc/travelwave.hpp"

namespace py = pybind11;
using namespace mtc;

namespace {

Eigen::VectorXd grid_nodes(int p, double ell) {
  return make_grid(p, ell).nodes;
}

Eigen::VectorXd grid_weights(int p, double ell) {
  return make_grid(p, ell).weights;
}

Eigen::VectorXd py_forward(const Eigen::VectorXd& values, int p, double ell) {
  const BasisGrid g = make_grid(p, ell);
  if (values.size() != g.size())
    throw DimensionError("forward: expected 2p nodal values");
  return forward({values, ell}, g).coeffs;
}

Eigen::VectorXd py_inverse(const Eigen::VectorXd& coeffs, int p, double ell) {
  const BasisGrid g = make_grid(p, ell);
  if (coeffs.size() != g.size())
    throw DimensionError("inverse: expected 2p coefficients");
  return inverse({coeffs, ell}, g).values;
}

Eigen::VectorXd py_eval(const Eigen::VectorXd& coeffs, double ell,
                        const Eigen::VectorXd& x) {
  const SpectralField a{coeffs, ell};
  Eigen::VectorXd out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i)
    out[i] = eval_expansion(a, x[i]);
  return out;
}

py::dict py_integrate(const Eigen::VectorXd& Y0, int p, double ell,
                      double alpha, double beta, double gamma, double delta,
                      double tau, double T, double fp_tol, int fp_max_iters) {
  const BasisGrid g = make_grid(p, ell);
  if (Y0.size() != g.size())
    throw DimensionError("integrate: expected 2p coefficients");
  const ModelParams params{alpha, beta, gamma, delta};
  BenjaminSystem sys = make_system(params, g);
  StepperConfig cfg;
  cfg.tau = tau;
  cfg.T = T;
  cfg.fp_tol = fp_tol;
  cfg.fp_max_iters = fp_max_iters;
  StepStats stats;
  const SpectralField Y = integrate({Y0, ell}, sys, cfg, nullptr, &stats);
  py::dict out;
  out["coeffs"] = Y.coeffs;
  out["steps"] = stats.steps;
  out["fp_iters_max"] = stats.fp_iters_max;
  out["hamiltonian"] = hamiltonian(Y, sys);
  return out;
}

double py_hamiltonian(const Eigen::VectorXd& Y, int p, double ell, double alpha,
                      double beta, double gamma, double delta) {
  const BasisGrid g = make_grid(p, ell);
  BenjaminSystem sys = make_system({alpha, beta, gamma, delta}, g);
  return hamiltonian({Y, ell}, sys);
}

py::dict py_solve_wave(int p, double ell, double alpha, double gamma,
                       double delta, double c, double sigma, int stages) {
  WaveProblem prob;
  prob.alpha = alpha;
  prob.gamma = gamma;
  prob.delta = delta;
  prob.c = c;
  prob.sigma = sigma;
  prob.stages = stages;
  prob.grid = make_grid(p, ell);
  WaveDiagnostics diag;
  const SpectralField v = solve_wave(prob, &diag);
  py::dict out;
  out["coeffs"] = v.coeffs;
  out["beta"] = prob.beta();
  out["residual"] = diag.residual;
  out["tolerance"] = wave_tolerance(sigma, prob.grid.n());
  return out;
}

py::dict py_run_example(int id, py::kwargs kw) {
  RunOverrides ov;
  if (kw.contains("p")) ov.p = kw["p"].cast<int>();
  if (kw.contains("ell")) ov.ell = kw["ell"].cast<double>();
  if (kw.contains("tau")) ov.tau = kw["tau"].cast<double>();
  if (kw.contains("T")) ov.T = kw["T"].cast<double>();
  const RunResult res = run_example(id, ov);
  py::dict out;
  out["n"] = static_cast<long>(res.summary.key);
  out["l2_error_max"] = res.summary.l2;
  out["linf_error_max"] = res.summary.linf;
  out["hamiltonian_drift_max"] = res.summary.ham_drift;
  out["steps"] = res.stats.steps;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rational spectral solver for the Benjamin equation";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);

  m.def("grid_nodes", &grid_nodes, py::arg("p"), py::arg("ell") = 8.0,
        "Collocation nodes (2p of them)");
  m.def("grid_weights", &grid_weights, py::arg("p"), py::arg("ell") = 8.0,
        "Quadrature weights");
  m.def("forward", &py_forward, py::arg("values"), py::arg("p"),
        py::arg("ell") = 8.0, "Nodal values -> MTC coefficients");
  m.def("inverse", &py_inverse, py::arg("coeffs"), py::arg("p"),
        py::arg("ell") = 8.0, "MTC coefficients -> nodal values");
  m.def("eval_expansion", &py_eval, py::arg("coeffs"), py::arg("ell"),
        py::arg("x"), "Evaluate the expansion at arbitrary points");
  m.def("apply_J",
        [](const Eigen::VectorXd& a, double ell) { return apply_J_vec(a, ell); },
        py::arg("coeffs"), py::arg("ell") = 8.0,
        "Apply the truncated -d/dx operator in coefficient space");
  m.def("apply_H",
        [](const Eigen::VectorXd& a) { return apply_H_vec(a); },
        py::arg("coeffs"), "Apply the Hilbert transform in coefficient space");
  m.def("integrate", &py_integrate, py::arg("coeffs"), py::arg("p"),
        py::arg("ell"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
        py::arg("delta"), py::arg("tau"), py::arg("T"),
        py::arg("fp_tol") = 1e-13, py::arg("fp_max_iters") = 50,
        "Advance the Benjamin system with the 8th-order Gauss IRK stepper");
  m.def("hamiltonian", &py_hamiltonian, py::arg("coeffs"), py::arg("p"),
        py::arg("ell"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"),
        py::arg("delta"), "Discrete Hamiltonian of a state");
  m.def("solve_wave", &py_solve_wave, py::arg("p"), py::arg("ell"),
        py::arg("alpha"), py::arg("gamma"), py::arg("delta"), py::arg("c"),
        py::arg("sigma"), py::arg("stages") = 20,
        "Even traveling-wave profile by sigma-continuation");
  m.def("run_example", &py_run_example, py::arg("id"),
        "Run one of the six benchmark experiments (kwargs: p, ell, tau, T)");
}
