#pragma once

#include "bjcalc/errors.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <string>
#include <string_view>

namespace bjcalc::numeric {

template <class Real>
using Complex = std::complex<Real>;
template <class Real>
using CVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;
template <class Real>
using CMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <class Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

/// Centered periodic grid: x_k = (k - N/2) L/N, k = 0..N-1.
template <class Real>
class UniformGrid {
 public:
  UniformGrid(int n, Real length) : n_(n), length_(length) {
    if (n < 16 || (n & (n - 1)) != 0) throw GridError("grid size must be a power of two >= 16, got " + std::to_string(n));
    if (!(length > 0) || !std::isfinite(static_cast<double>(length))) throw GridError("box length must be positive");
  }

  int size() const { return n_; }
  Real length() const { return length_; }
  Real spacing() const { return length_ / n_; }
  Real point(int k) const { return (k - n_ / 2) * spacing(); }
  RVector<Real> points() const {
    RVector<Real> x(n_);
    for (int k = 0; k < n_; ++k) x[k] = point(k);
    return x;
  }

  /// The dual momentum grid has spacing 2*pi*hbar/L, so dx*dp*N = 2*pi*hbar.
  Real momentum_spacing(Real hbar) const { return 2 * std::numbers::pi_v<Real> * hbar / length_; }
  Real momentum(int m, Real hbar) const { return (m - n_ / 2) * momentum_spacing(hbar); }
  RVector<Real> momenta(Real hbar) const {
    RVector<Real> p(n_);
    for (int m = 0; m < n_; ++m) p[m] = momentum(m, hbar);
    return p;
  }

  bool operator==(const UniformGrid&) const = default;

 private:
  int n_;
  Real length_;
};

template <class Real>
struct SampledWavefunction {
  UniformGrid<Real> grid;
  Real hbar;
  CVector<Real> values;

  Real norm() const { return std::sqrt(grid.spacing() * values.squaredNorm()); }
};

/// values(j, m) = a(x_j, p_m) on the phase-space grid induced by `grid` and hbar.
template <class Real>
struct SampledSymbol {
  UniformGrid<Real> grid;
  Real hbar;
  CMatrix<Real> values;
};

using Diagnostics = std::function<void(std::string_view)>;

template <class Real>
struct NumericParams {
  Real hbar = 1;
  int quadrature_order = 16;
  Real tolerance = Real(1e-8);
  Diagnostics diagnostics;

  void warn(std::string_view message) const {
    if (diagnostics) diagnostics(message);
  }
};

template <class Real>
Real relative_l2_error(const CVector<Real>& actual, const CVector<Real>& expected) {
  return (actual - expected).norm() / expected.norm();
}

namespace detail {

template <class Real>
void check_finite(const CVector<Real>& v, const char* what) {
  if (!v.allFinite()) throw GridError(std::string(what) + " contains non-finite values");
}

template <class Real>
void check_state(const SampledWavefunction<Real>& psi) {
  if (psi.values.size() != psi.grid.size()) throw GridError("wavefunction length does not match its grid");
  if (!(psi.hbar > 0)) throw GridError("hbar must be positive");
  check_finite<Real>(psi.values, "wavefunction");
}

template <class Real>
void check_symbol(const SampledSymbol<Real>& a) {
  const int n = a.grid.size();
  if (a.values.rows() != a.values.cols()) throw GridError("symbol grid is not square");
  if (a.values.rows() != n) throw GridError("symbol samples do not match the grid size");
  if (!(a.hbar > 0)) throw GridError("hbar must be positive");
  if (!a.values.allFinite()) throw GridError("symbol contains non-finite values");
}

template <class Real>
void check_compatible(const SampledSymbol<Real>& a, const SampledWavefunction<Real>& psi) {
  if (!(a.grid == psi.grid)) throw GridError("symbol and wavefunction grids differ");
  if (a.hbar != psi.hbar) throw GridError("symbol and wavefunction use different hbar");
}

template <class Real>
void warn_boundary(const SampledWavefunction<Real>& psi, const NumericParams<Real>& params) {
  const Real peak = psi.values.cwiseAbs().maxCoeff();
  const int n = psi.grid.size();
  const Real edge = std::max(std::abs(psi.values[0]), std::abs(psi.values[n - 1]));
  if (peak > 0 && edge > params.tolerance * peak)
    params.warn("wavefunction does not decay at the box boundary (edge/peak = " +
                std::to_string(static_cast<double>(edge / peak)) + "); periodic wrap-around expected");
}

/// Signed frequency of FFT bin k.
inline int frequency(int k, int n) { return k < n / 2 ? k : k - n; }

template <class Real>
CVector<Real> fft(const CVector<Real>& v) {
  Eigen::FFT<Real> engine;
  CVector<Real> out(v.size());
  engine.fwd(out, v);
  return out;
}

/// Unnormalized inverse: sum_k e^{+2 pi i jk/N} v_k.
template <class Real>
CVector<Real> ifft_unscaled(const CVector<Real>& v) {
  Eigen::FFT<Real> engine;
  engine.SetFlag(Eigen::FFT<Real>::Unscaled);
  CVector<Real> out(v.size());
  engine.inv(out, v);
  return out;
}

/// out_l = sum_k e^{sign 2 pi i (l - N/2)(k - N/2)/N} v_k.
template <class Real>
CVector<Real> centered_dft(const CVector<Real>& v, int sign) {
  const int n = static_cast<int>(v.size());
  CVector<Real> w = v;
  for (int k = 1; k < n; k += 2) w[k] = -w[k];
  w = sign < 0 ? fft<Real>(w) : ifft_unscaled<Real>(w);
  for (int k = 1; k < n; k += 2) w[k] = -w[k];
  if ((n / 2) % 2 == 1) w = -w;
  return w;
}

/// Band-limited periodic translation: out(x) = v(x - shift).
template <class Real>
CVector<Real> translate(const CVector<Real>& v, Real shift, Real length) {
  const int n = static_cast<int>(v.size());
  CVector<Real> spectrum = fft<Real>(v);
  const Real two_pi = 2 * std::numbers::pi_v<Real>;
  for (int k = 0; k < n; ++k)
    spectrum[k] *= std::polar(Real(1), -two_pi * frequency(k, n) * shift / length);
  return ifft_unscaled<Real>(spectrum) / Real(n);
}

/// Spectral momentum power: (hbar D / i)^s applied to v.
template <class Real>
CVector<Real> momentum_power(const CVector<Real>& v, unsigned s, Real hbar, Real length) {
  if (s == 0) return v;
  const int n = static_cast<int>(v.size());
  CVector<Real> spectrum = fft<Real>(v);
  const Real two_pi = 2 * std::numbers::pi_v<Real>;
  for (int k = 0; k < n; ++k) spectrum[k] *= std::pow(hbar * two_pi * frequency(k, n) / length, static_cast<int>(s));
  return ifft_unscaled<Real>(spectrum) / Real(n);
}

}  // namespace detail
}  // namespace bjcalc::numeric
