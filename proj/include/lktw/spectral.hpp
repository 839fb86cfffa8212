#pragma once

// Trigonometric interpolation of uniformly sampled periodic vector data.
// Samples f_j = f(2 pi j / n), j = 0..n-1, define the unique interpolant of
// degree n/2 with the Nyquist mode taken as a pure cosine.

#include <Eigen/Core>
#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "lktw/errors.hpp"

namespace lktw::spectral {

using Samples = Eigen::MatrixXd;  // n rows, one column per coordinate

class TrigInterpolant {
 public:
  TrigInterpolant() = default;

  explicit TrigInterpolant(const Samples& f) : n_(static_cast<int>(f.rows())), coef_(f.rows(), f.cols()) {
    if (n_ < 2) throw error("trigonometric interpolation needs at least two samples");
    Eigen::FFT<double> fft;
    std::vector<double> in(n_);
    std::vector<std::complex<double>> out;
    for (int c = 0; c < f.cols(); ++c) {
      for (int j = 0; j < n_; ++j) in[j] = f(j, c);
      fft.fwd(out, in);
      for (int k = 0; k < n_; ++k) coef_(k, c) = out[k] / static_cast<double>(n_);
    }
  }

  int size() const { return n_; }
  int dim() const { return static_cast<int>(coef_.cols()); }

  /// Value (order 0) or derivative of the given order at parameter t.
  Eigen::VectorXd eval(double t, int order = 0) const {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(dim());
    if (order == 0) r = coef_.row(0).real().transpose();
    const std::complex<double> step = std::polar(1.0, t);
    std::complex<double> e = 1.0;
    for (int k = 1; k <= (n_ - 1) / 2; ++k) {
      e *= step;
      const std::complex<double> d = ipow(k, order) * e;
      for (int c = 0; c < dim(); ++c) r[c] += 2.0 * std::real(d * coef_(k, c));
    }
    if (n_ % 2 == 0) {
      // Nyquist mode: c_k cos(kt) with c_k real.
      const double m = n_ / 2;
      double w = 0.0;
      switch (order % 4) {
        case 0: w = std::cos(m * t); break;
        case 1: w = -std::sin(m * t); break;
        case 2: w = -std::cos(m * t); break;
        default: w = std::sin(m * t); break;
      }
      w *= std::pow(m, order);
      for (int c = 0; c < dim(); ++c) r[c] += std::real(coef_(n_ / 2, c)) * w;
    }
    return r;
  }

  /// Integral from 0 to t, ignoring the mean term.
  Eigen::VectorXd integral(double t) const {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(dim());
    const std::complex<double> step = std::polar(1.0, t);
    std::complex<double> e = 1.0;
    for (int k = 1; k <= (n_ - 1) / 2; ++k) {
      e *= step;
      const std::complex<double> d = (e - 1.0) / std::complex<double>(0.0, k);
      for (int c = 0; c < dim(); ++c) r[c] += 2.0 * std::real(d * coef_(k, c));
    }
    if (n_ % 2 == 0) {
      const double m = n_ / 2;
      for (int c = 0; c < dim(); ++c) r[c] += std::real(coef_(n_ / 2, c)) * std::sin(m * t) / m;
    }
    return r;
  }

 private:
  static std::complex<double> ipow(int k, int order) {
    std::complex<double> d(1.0, 0.0);
    for (int i = 0; i < order; ++i) d *= std::complex<double>(0.0, k);
    return d;
  }

  int n_ = 0;
  Eigen::MatrixXcd coef_;
};

/// Derivative at the sample nodes, d/dt with t in [0, 2 pi).
inline Samples derivative(const Samples& f) {
  const int n = static_cast<int>(f.rows());
  Eigen::FFT<double> fft;
  std::vector<double> in(n), back;
  std::vector<std::complex<double>> spec;
  Samples out(f.rows(), f.cols());
  for (int c = 0; c < f.cols(); ++c) {
    for (int j = 0; j < n; ++j) in[j] = f(j, c);
    fft.fwd(spec, in);
    for (int k = 0; k < n; ++k) {
      const int kk = (k <= n / 2) ? k : k - n;
      spec[k] *= (n % 2 == 0 && k == n / 2) ? std::complex<double>(0.0) : std::complex<double>(0.0, kk);
    }
    fft.inv(back, spec);
    for (int j = 0; j < n; ++j) out(j, c) = back[j];
  }
  return out;
}

/// Values at m uniform nodes of the interpolant through the n samples of f,
/// by zero padding or truncating the spectrum. Order > 0 differentiates.
inline Samples resample(const Samples& f, int m, int order = 0) {
  const int n = static_cast<int>(f.rows());
  if (m < 2) throw error("resampling needs at least two nodes");
  if (m == n && order == 0) return f;
  if (m == n && order == 1) return derivative(f);
  Eigen::FFT<double> fft;
  std::vector<double> in(n), back;
  std::vector<std::complex<double>> spec, padded(m);
  Samples out(m, f.cols());
  const int kmax = std::min((n - 1) / 2, (m - 1) / 2);
  for (int c = 0; c < f.cols(); ++c) {
    for (int j = 0; j < n; ++j) in[j] = f(j, c);
    fft.fwd(spec, in);
    std::fill(padded.begin(), padded.end(), std::complex<double>(0.0));
    const double scale = static_cast<double>(m) / n;
    for (int k = -kmax; k <= kmax; ++k) {
      std::complex<double> v = spec[(k + n) % n] * scale;
      for (int o = 0; o < order; ++o) v *= std::complex<double>(0.0, k);
      padded[(k + m) % m] = v;
    }
    if (n % 2 == 0 && n / 2 <= (m - 1) / 2) {
      // Nyquist cosine of the source splits evenly between +-n/2 in the target.
      const int k = n / 2;
      std::complex<double> v = spec[k] * scale * 0.5;
      std::complex<double> vp = v, vm = v;
      for (int o = 0; o < order; ++o) {
        vp *= std::complex<double>(0.0, k);
        vm *= std::complex<double>(0.0, -k);
      }
      padded[k] += vp;
      padded[m - k] += vm;
    }
    fft.inv(back, padded);
    for (int j = 0; j < m; ++j) out(j, c) = back[j];
  }
  return out;
}

}  // namespace lktw::spectral
