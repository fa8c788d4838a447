#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

namespace mtc {

// Minimal real banded matrix (square), diagonal storage: entry (i, j) with
// -kl <= i - j <= ku lives at bands(ku + i - j, j).
class BandedMatrix {
 public:
  BandedMatrix() = default;
  BandedMatrix(int n, int kl, int ku)
      : n_(n), kl_(kl), ku_(ku), bands_(Eigen::MatrixXd::Zero(kl + ku + 1, n)) {}

  int size() const { return n_; }
  int lower() const { return kl_; }
  int upper() const { return ku_; }

  double operator()(int i, int j) const {
    const int d = i - j;
    if (d > kl_ || -d > ku_) return 0.0;
    return bands_(ku_ + d, j);
  }
  double& ref(int i, int j) {
    const int d = i - j;
    if (d > kl_ || -d > ku_) throw std::out_of_range("BandedMatrix: outside band");
    return bands_(ku_ + d, j);
  }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n_);
    for (int j = 0; j < n_; ++j) {
      const double xj = x[j];
      if (xj == 0.0) continue;
      const int ilo = std::max(0, j - ku_);
      const int ihi = std::min(n_ - 1, j + kl_);
      for (int i = ilo; i <= ihi; ++i) y[i] += bands_(ku_ + i - j, j) * xj;
    }
    return y;
  }

  Eigen::MatrixXd dense() const {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n_, n_);
    for (int j = 0; j < n_; ++j)
      for (int i = std::max(0, j - ku_); i <= std::min(n_ - 1, j + kl_); ++i)
        d(i, j) = (*this)(i, j);
    return d;
  }

  BandedMatrix multiply(const BandedMatrix& other) const {
    BandedMatrix c(n_, kl_ + other.kl_, ku_ + other.ku_);
    for (int j = 0; j < n_; ++j) {
      const int klo = std::max(0, j - other.ku_);
      const int khi = std::min(n_ - 1, j + other.kl_);
      for (int k = klo; k <= khi; ++k) {
        const double b = other(k, j);
        if (b == 0.0) continue;
        const int ilo = std::max(0, k - ku_);
        const int ihi = std::min(n_ - 1, k + kl_);
        for (int i = ilo; i <= ihi; ++i) c.ref(i, j) += (*this)(i, k) * b;
      }
    }
    return c;
  }

  BandedMatrix& axpy(double s, const BandedMatrix& other) {
    for (int j = 0; j < n_; ++j) {
      const int ilo = std::max(0, j - other.ku_);
      const int ihi = std::min(n_ - 1, j + other.kl_);
      for (int i = ilo; i <= ihi; ++i) ref(i, j) += s * other(i, j);
    }
    return *this;
  }

  // Drop outer diagonals that are identically zero.
  BandedMatrix trimmed(double tol = 0.0) const {
    int kl = 0, ku = 0;
    for (int j = 0; j < n_; ++j)
      for (int i = std::max(0, j - ku_); i <= std::min(n_ - 1, j + kl_); ++i)
        if (std::abs((*this)(i, j)) > tol) {
          kl = std::max(kl, i - j);
          ku = std::max(ku, j - i);
        }
    BandedMatrix c(n_, kl, ku);
    for (int j = 0; j < n_; ++j)
      for (int i = std::max(0, j - ku); i <= std::min(n_ - 1, j + kl); ++i)
        c.ref(i, j) = (*this)(i, j);
    return c;
  }

 private:
  int n_ = 0, kl_ = 0, ku_ = 0;
  Eigen::MatrixXd bands_;
};

// LU factorization of a complex banded matrix (shift*I + scale*D with D real
// banded), backed by LAPACK zgbtrf/zgbtrs.
class ComplexBandedLU {
 public:
  ComplexBandedLU() = default;

  // Factor M = I - z * D.
  ComplexBandedLU(std::complex<double> z, const BandedMatrix& D);

  Eigen::VectorXcd solve(const Eigen::VectorXcd& rhs) const;

 private:
  int n_ = 0, kl_ = 0, ku_ = 0, ldab_ = 0;
  std::vector<std::complex<double>> ab_;
  std::vector<int> ipiv_;
};

}  // namespace mtc
