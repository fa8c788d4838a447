#include "mtc/model.hpp"

#include "mtc/transform.hpp"

namespace mtc {

Eigen::VectorXd BenjaminSystem::source_coeffs(double t) const {
  if (!source) return Eigen::VectorXd::Zero(grid.size());
  // Quadrature on a refined grid approximates the L^2 projection of f(.,t);
  // plain interpolation on the collocation grid aliases the slowly decaying
  // tails of the source into the resolved modes.
  const BasisGrid& fine = source_grid.p > grid.p ? source_grid : grid;
  NodalField v;
  v.ell = fine.ell;
  v.values.resize(fine.size());
  for (int m = 0; m < fine.size(); ++m) v.values[m] = source(fine.nodes[m], t);
  const Eigen::VectorXd a = forward(v, fine).coeffs;
  return a.head(grid.size());
}

BenjaminSystem make_system(const ModelParams& params, const BasisGrid& grid,
                           SourceFn source, int source_refine) {
  if (source_refine < 1)
    throw ConfigError("make_system: source_refine must be >= 1");
  BenjaminSystem sys;
  sys.params = params;
  sys.grid = grid;
  sys.source_grid =
      source_refine > 1 ? make_grid(source_refine * grid.p, grid.ell) : grid;
  sys.bundle = build_D(params, grid);
  sys.source = std::move(source);
  return sys;
}

SpectralField rhs(const SpectralField& Y, double t, const BenjaminSystem& sys) {
  if (Y.coeffs.size() != sys.grid.size())
    throw DimensionError("rhs: length does not match grid");
  const SpectralField F = nonlinearity(Y, sys.params.delta, sys.grid);
  Eigen::VectorXd out =
      sys.bundle.D.apply(Y.coeffs) + apply_J_vec(F.coeffs, sys.grid.ell);
  if (sys.source) out += sys.source_coeffs(t);
  return {std::move(out), Y.ell};
}

double hamiltonian(const SpectralField& Y, const BenjaminSystem& sys) {
  const auto& prm = sys.params;
  const Eigen::VectorXd JY = apply_J_vec(Y.coeffs, sys.grid.ell);
  const Eigen::VectorXd HJY = apply_H_vec(JY);
  const SpectralField C = nonlinearity(Y, 1.0, sys.grid);
  return 0.5 * (prm.alpha * Y.coeffs.squaredNorm() + prm.beta * Y.coeffs.dot(HJY) +
                prm.gamma * JY.squaredNorm() +
                2.0 * prm.delta / 3.0 * Y.coeffs.dot(C.coeffs));
}

SourceFn make_source(std::shared_ptr<const ExactSolution> exact,
                     const ModelParams& params) {
  if (params.beta != 0.0 && !exact->has_hilbert())
    throw std::invalid_argument(
        "make_source: beta != 0 requires an exact Hilbert transform");
  return [exact, params](double x, double t) {
    double f = exact->time_deriv(x, t) + params.alpha * exact->deriv(x, t, 1) -
               params.gamma * exact->deriv(x, t, 3) +
               params.delta * 2.0 * exact->value(x, t) * exact->deriv(x, t, 1);
    if (params.beta != 0.0) f -= params.beta * exact->hilbert(x, t, 2);
    return f;
  };
}

}  // namespace mtc
