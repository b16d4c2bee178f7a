#pragma once

#include "bjcalc/numeric/grid.hpp"

namespace bjcalc::numeric {

/// Phase-space point z = (x, p).
template <class Real>
struct PhasePoint {
  Real x = 0;
  Real p = 0;
};

/// a_sigma(z) = (1/2 pi hbar) sum e^{-i sigma(z,z')/hbar} a(z') dz' with sigma(z,z') = p x' - x p'.
/// On the induced grid this is (1/N) F^* A^T F, with F the centered DFT; it is an involution.
template <class Real>
SampledSymbol<Real> symplectic_ft(const SampledSymbol<Real>& a) {
  detail::check_symbol(a);
  const int n = a.grid.size();
  CMatrix<Real> by_l(n, n);  // (l, m): x' summed with the negative sign
  for (int m = 0; m < n; ++m) by_l.col(m) = detail::centered_dft<Real>(a.values.col(m), -1);
  CMatrix<Real> out(n, n);  // (j, l): p' summed with the positive sign
  for (int l = 0; l < n; ++l) out.col(l) = detail::centered_dft<Real>(by_l.row(l).transpose(), +1);
  return {a.grid, a.hbar, out / Real(n)};
}

/// sin(u)/u with a Taylor guard near zero.
template <class Real>
Real sinc(Real u) {
  if (std::abs(u) < Real(1e-4)) return 1 - u * u / 6;
  return std::sin(u) / u;
}

/// Weyl symbol of the Born-Jordan operator with symbol a: multiply a_sigma by sinc(px/2 hbar).
template <class Real>
SampledSymbol<Real> bj_weyl_symbol_numeric(const SampledSymbol<Real>& a) {
  SampledSymbol<Real> spectrum = symplectic_ft(a);
  const int n = a.grid.size();
  for (int l = 0; l < n; ++l) {
    const Real p = a.grid.momentum(l, a.hbar);
    for (int j = 0; j < n; ++j) spectrum.values(j, l) *= sinc(p * a.grid.point(j) / (2 * a.hbar));
  }
  return symplectic_ft(spectrum);
}

namespace detail {

template <class Real>
void check_shift(const SampledWavefunction<Real>& psi, const PhasePoint<Real>& z0) {
  check_state(psi);
  if (!(std::abs(z0.x) < psi.grid.length() / 2) || !std::isfinite(static_cast<double>(z0.p)))
    throw GridError("phase-space shift must satisfy |x0| < L/2");
}

}  // namespace detail

/// T(z0) psi(x) = e^{i(p0 x - p0 x0/2)/hbar} psi(x - x0).
template <class Real>
SampledWavefunction<Real> heisenberg_shift(const SampledWavefunction<Real>& psi, const PhasePoint<Real>& z0) {
  detail::check_shift(psi, z0);
  CVector<Real> out = detail::translate<Real>(psi.values, z0.x, psi.grid.length());
  for (int k = 0; k < psi.grid.size(); ++k)
    out[k] *= std::polar(Real(1), (z0.p * psi.grid.point(k) - z0.p * z0.x / 2) / psi.hbar);
  return {psi.grid, psi.hbar, out};
}

/// Reflection about z0: e^{2 i p0 (x - x0)/hbar} psi(2 x0 - x).
template <class Real>
SampledWavefunction<Real> grossmann_royer_apply(const SampledWavefunction<Real>& psi, const PhasePoint<Real>& z0) {
  detail::check_shift(psi, z0);
  const int n = psi.grid.size();
  CVector<Real> reflected(n);
  for (int k = 0; k < n; ++k) reflected[k] = psi.values[(n - k) % n];
  CVector<Real> out = detail::translate<Real>(reflected, 2 * z0.x, psi.grid.length());
  for (int k = 0; k < n; ++k) out[k] *= std::polar(Real(1), 2 * z0.p * (psi.grid.point(k) - z0.x) / psi.hbar);
  return {psi.grid, psi.hbar, out};
}

/// Weyl operator as a superposition of reflections, (1/pi hbar) sum a(z0) Pi(z0) psi dz0, with
/// centers on the half-spaced x grid. Verification path only: O(N^2) reflections.
template <class Real, class Symbol>
SampledWavefunction<Real> weyl_via_reflections(const Symbol& a, const SampledWavefunction<Real>& psi) {
  detail::check_state(psi);
  const UniformGrid<Real>& grid = psi.grid;
  const int n = grid.size();
  const Real dx0 = grid.spacing() / 2;
  const Real dp = grid.momentum_spacing(psi.hbar);
  CVector<Real> out = CVector<Real>::Zero(n);
  for (int h = -n + 1; h < n; ++h) {
    const Real x0 = h * dx0;
    // Reflected samples that wrapped around the box belong to other centers.
    CVector<Real> base = grossmann_royer_apply(psi, PhasePoint<Real>{x0, 0}).values;
    for (int k = 0; k < n; ++k)
      if (h - k + n < 0 || h - k + n >= n) base[k] = 0;
    for (int m = 0; m < n; ++m) {
      const Real p0 = grid.momentum(m, psi.hbar);
      const Complex<Real> weight = Complex<Real>(a(x0, p0));
      if (weight == Complex<Real>(0)) continue;
      for (int k = 0; k < n; ++k)
        out[k] += weight * std::polar(Real(1), 2 * p0 * (grid.point(k) - x0) / psi.hbar) * base[k];
    }
  }
  return {grid, psi.hbar, out * (dx0 * dp / (std::numbers::pi_v<Real> * psi.hbar))};
}

}  // namespace bjcalc::numeric
