#include "mtc/operators.hpp"

#include <lapacke.h>

#include "mtc/transform.hpp"

namespace mtc {

Eigen::VectorXd apply_J_vec(const Eigen::VectorXd& a, double ell) {
  const int np = static_cast<int>(a.size());
  const int p = np / 2;
  Eigen::VectorXd d = Eigen::VectorXd::Zero(np);  // derivative coefficients
  for (int k = 0; k < p; ++k) {
    const double ae = a[2 * k];
    if (ae != 0.0) {
      // d/dx phi_{2k} = (k+1)/l phi_{2k+3} - (2k+1)/l phi_{2k+1} + k/l phi_{2k-1}
      if (2 * k + 3 < np) d[2 * k + 3] += (k + 1) / ell * ae;
      d[2 * k + 1] -= (2.0 * k + 1.0) / ell * ae;
      if (k >= 1) d[2 * k - 1] += k / ell * ae;
    }
    const double ao = a[2 * k + 1];
    if (ao != 0.0) {
      // d/dx phi_{2k+1} = -(k+1)/l phi_{2k+2} + (2k+1)/l phi_{2k} - k/l phi_{2k-2}
      if (2 * k + 2 < np) d[2 * k + 2] -= (k + 1) / ell * ao;
      d[2 * k] += (2.0 * k + 1.0) / ell * ao;
      if (k >= 1) d[2 * k - 2] -= k / ell * ao;
    }
  }
  return -d;
}

Eigen::VectorXd apply_H_vec(const Eigen::VectorXd& a) {
  const int np = static_cast<int>(a.size());
  Eigen::VectorXd out(np);
  for (int k = 0; 2 * k + 1 < np; ++k) {
    out[2 * k] = -a[2 * k + 1];
    out[2 * k + 1] = a[2 * k];
  }
  return out;
}

SpectralField apply_J(const SpectralField& a, const BasisGrid& g) {
  if (a.coeffs.size() != g.size())
    throw DimensionError("apply_J: length does not match grid");
  return {apply_J_vec(a.coeffs, g.ell), a.ell};
}

SpectralField apply_H(const SpectralField& a) {
  return {apply_H_vec(a.coeffs), a.ell};
}

BandedMatrix build_J(int p, double ell) {
  const int np = 2 * p;
  BandedMatrix J(np, 3, 3);
  for (int k = 0; k < p; ++k) {
    if (2 * k + 3 < np) J.ref(2 * k + 3, 2 * k) = -(k + 1) / ell;
    J.ref(2 * k + 1, 2 * k) = (2.0 * k + 1.0) / ell;
    if (k >= 1) J.ref(2 * k - 1, 2 * k) = -k / ell;
    if (2 * k + 2 < np) J.ref(2 * k + 2, 2 * k + 1) = (k + 1) / ell;
    J.ref(2 * k, 2 * k + 1) = -(2.0 * k + 1.0) / ell;
    if (k >= 1) J.ref(2 * k - 2, 2 * k + 1) = k / ell;
  }
  return J;
}

BandedMatrix build_H(int p) {
  const int np = 2 * p;
  BandedMatrix H(np, 1, 1);
  for (int k = 0; k < p; ++k) {
    H.ref(2 * k, 2 * k + 1) = -1.0;
    H.ref(2 * k + 1, 2 * k) = 1.0;
  }
  return H;
}

OperatorBundle build_D(const ModelParams& params, const BasisGrid& g) {
  OperatorBundle b;
  b.p = g.p;
  b.ell = g.ell;
  b.params = params;
  b.J = build_J(g.p, g.ell);

  const BandedMatrix H = build_H(g.p);
  const BandedMatrix J2 = b.J.multiply(b.J);
  const BandedMatrix J3 = J2.multiply(b.J);
  const BandedMatrix HJ2 = H.multiply(J2);

  BandedMatrix D(g.size(), 9, 9);
  D.axpy(params.alpha, b.J);
  D.axpy(params.beta, HJ2);
  D.axpy(-params.gamma, J3);
  b.D = D.trimmed();
  return b;
}

SpectralField nonlinearity(const SpectralField& a, double delta,
                           const BasisGrid& g) {
  NodalField v = inverse(a, g);
  v.values = delta * v.values.array().square().matrix();
  return forward(v, g);
}

ComplexBandedLU::ComplexBandedLU(std::complex<double> z,
                                 const BandedMatrix& D) {
  n_ = D.size();
  kl_ = D.lower();
  ku_ = D.upper();
  ldab_ = 2 * kl_ + ku_ + 1;
  ab_.assign(static_cast<size_t>(ldab_) * n_, {0.0, 0.0});
  ipiv_.assign(n_, 0);
  for (int j = 0; j < n_; ++j) {
    const int ilo = std::max(0, j - ku_);
    const int ihi = std::min(n_ - 1, j + kl_);
    for (int i = ilo; i <= ihi; ++i)
      ab_[static_cast<size_t>(j) * ldab_ + (kl_ + ku_ + i - j)] = -z * D(i, j);
    ab_[static_cast<size_t>(j) * ldab_ + (kl_ + ku_)] += 1.0;  // identity
  }
  const int info = LAPACKE_zgbtrf(
      LAPACK_COL_MAJOR, n_, n_, kl_, ku_,
      reinterpret_cast<lapack_complex_double*>(ab_.data()), ldab_,
      ipiv_.data());
  if (info != 0)
    throw std::runtime_error("ComplexBandedLU: zgbtrf failed, info=" +
                             std::to_string(info));
}

Eigen::VectorXcd ComplexBandedLU::solve(const Eigen::VectorXcd& rhs) const {
  if (rhs.size() != n_) throw DimensionError("ComplexBandedLU: size mismatch");
  Eigen::VectorXcd x = rhs;
  const int info = LAPACKE_zgbtrs(
      LAPACK_COL_MAJOR, 'N', n_, kl_, ku_, 1,
      reinterpret_cast<const lapack_complex_double*>(ab_.data()), ldab_,
      ipiv_.data(), reinterpret_cast<lapack_complex_double*>(x.data()), n_);
  if (info != 0)
    throw std::runtime_error("ComplexBandedLU: zgbtrs failed, info=" +
                             std::to_string(info));
  return x;
}

}  // namespace mtc
