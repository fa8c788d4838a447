#include "mtc/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <vector>

namespace mtc {

namespace {

void check_len(long len, const BasisGrid& g, const char* who) {
  if (len != g.size())
    throw DimensionError(std::string(who) + ": length does not match grid");
}

// FFTW planning is not thread-safe; plans are cached per size and executed
// on caller-owned buffers (FFTW_UNALIGNED allows that).
fftw_plan backward_plan(int n) {
  static std::mutex mu;
  static std::map<int, fftw_plan> plans;
  std::lock_guard<std::mutex> lock(mu);
  auto it = plans.find(n);
  if (it != plans.end()) return it->second;
  std::vector<std::complex<double>> tmp(n);
  fftw_plan plan = fftw_plan_dft_1d(
      n, reinterpret_cast<fftw_complex*>(tmp.data()),
      reinterpret_cast<fftw_complex*>(tmp.data()), FFTW_BACKWARD,
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  plans[n] = plan;
  return plan;
}

void backward_fft(std::vector<std::complex<double>>& buf) {
  fftw_plan plan = backward_plan(static_cast<int>(buf.size()));
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(buf.data()),
                   reinterpret_cast<fftw_complex*>(buf.data()));
}

}  // namespace

SpectralField forward_naive(const NodalField& v, const BasisGrid& g) {
  check_len(v.values.size(), g, "forward_naive");
  const int np = g.size();
  SpectralField out;
  out.ell = g.ell;
  out.coeffs = Eigen::VectorXd::Zero(np);
  for (int m = 0; m < np; ++m) {
    const double theta = g.theta[m];
    const double fw = g.weights[m] * v.values[m];
    const double amp = 2.0 / std::sqrt(M_PI * g.ell) * std::sin(0.5 * theta);
    const std::complex<double> step(std::cos(theta), std::sin(theta));
    std::complex<double> w(std::cos(0.5 * theta), std::sin(0.5 * theta));
    for (int k = 0; k < g.p; ++k) {
      out.coeffs[2 * k] += fw * amp * w.imag();
      out.coeffs[2 * k + 1] += fw * amp * w.real();
      w *= step;
    }
  }
  return out;
}

NodalField inverse_naive(const SpectralField& a, const BasisGrid& g) {
  check_len(a.coeffs.size(), g, "inverse_naive");
  const int np = g.size();
  NodalField out;
  out.ell = g.ell;
  out.values.resize(np);
  SpectralField tmp{a.coeffs, g.ell};
  for (int m = 0; m < np; ++m) out.values[m] = eval_expansion(tmp, g.nodes[m]);
  return out;
}

SpectralField forward(const NodalField& v, const BasisGrid& g) {
  check_len(v.values.size(), g, "forward");
  const int p = g.p;
  const int np = 2 * p;
  const double pi = M_PI;

  // With g_m = f(x_m)/sin(theta_m/2), the even coefficients are odd-harmonic
  // sine sums and the odd ones the cosine analogues on the midpoint grid.
  // Both reduce to one complex FFT of length 2p after twiddling.
  std::vector<std::complex<double>> buf(np);
  for (int m = 0; m < np; ++m) {
    const double gm = v.values[m] / std::sin(0.5 * g.theta[m]);
    const double ang = pi * m / (2.0 * p);
    buf[m] = gm * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  backward_fft(buf);

  SpectralField out;
  out.ell = g.ell;
  out.coeffs.resize(np);
  const double scale = std::sqrt(pi * g.ell) / (2.0 * p);
  for (int k = 0; k < p; ++k) {
    const double ang = pi * (2.0 * k + 1.0) / (4.0 * p);
    const std::complex<double> e =
        std::complex<double>(std::cos(ang), std::sin(ang)) * buf[k];
    out.coeffs[2 * k] = scale * e.imag();
    out.coeffs[2 * k + 1] = scale * e.real();
  }
  return out;
}

NodalField inverse(const SpectralField& a, const BasisGrid& g) {
  check_len(a.coeffs.size(), g, "inverse");
  const int p = g.p;
  const int np = 2 * p;
  const double pi = M_PI;

  std::vector<std::complex<double>> buf(np, std::complex<double>(0.0, 0.0));
  for (int k = 0; k < p; ++k) {
    const std::complex<double> bk(a.coeffs[2 * k + 1], -a.coeffs[2 * k]);
    const double ang = pi * k / (2.0 * p);
    buf[k] = bk * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  backward_fft(buf);

  NodalField out;
  out.ell = g.ell;
  out.values.resize(np);
  const double amp0 = 2.0 / std::sqrt(pi * g.ell);
  for (int m = 0; m < np; ++m) {
    const double ang = pi * (2.0 * m + 1.0) / (4.0 * p);
    const std::complex<double> e =
        std::complex<double>(std::cos(ang), std::sin(ang)) * buf[m];
    out.values[m] = amp0 * std::sin(0.5 * g.theta[m]) * e.real();
  }
  return out;
}

SpectralField interpolate(const std::function<double(double)>& f,
                          const BasisGrid& g) {
  NodalField v;
  v.ell = g.ell;
  v.values.resize(g.size());
  for (int m = 0; m < g.size(); ++m) v.values[m] = f(g.nodes[m]);
  return forward(v, g);
}

}  // namespace mtc
