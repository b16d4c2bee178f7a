#pragma once

#include "bjcalc/numeric/sampling.hpp"

namespace bjcalc::numeric {

namespace detail {

template <class Real>
void require_unit_hbar(Real hbar) {
  if (std::abs(hbar - 1) > Real(1e-12)) throw GridError("anti-Wick operators are only defined here for hbar = 1");
}

/// e^{-d^2/2} with d the periodic distance between two grid points.
template <class Real>
Real wrapped_gaussian(const UniformGrid<Real>& grid, int j, int k) {
  const int n = grid.size();
  int offset = ((j - k) % n + n) % n;
  if (offset > n / 2) offset -= n;
  const Real d = offset * grid.spacing();
  return std::exp(-d * d / 2);
}

}  // namespace detail

/// Op_AW(a) psi = sum_z a(z) <psi, Phi_z> Phi_z dz with Phi_z(t) = pi^{-1/4} e^{itp} e^{-(t-x)^2/2}.
/// The coherent-state transform at each window center is one centered DFT.
template <class Real>
SampledWavefunction<Real> antiwick_apply(const SampledSymbol<Real>& a, const SampledWavefunction<Real>& psi) {
  detail::check_symbol(a);
  detail::check_state(psi);
  detail::check_compatible(a, psi);
  detail::require_unit_hbar(psi.hbar);
  const UniformGrid<Real>& grid = psi.grid;
  const int n = grid.size();
  const Real norm = std::pow(std::numbers::pi_v<Real>, Real(-0.25));
  const Real dx = grid.spacing();
  const Real dp = grid.momentum_spacing(psi.hbar);
  CVector<Real> out = CVector<Real>::Zero(n);
  CVector<Real> windowed(n);
  for (int j = 0; j < n; ++j) {
    const CVector<Real> row = a.values.row(j).transpose();
    if (row.isZero(0)) continue;
    for (int k = 0; k < n; ++k) windowed[k] = psi.values[k] * detail::wrapped_gaussian(grid, k, j);
    CVector<Real> coefficients = detail::centered_dft<Real>(windowed, -1) * (norm * dx);
    coefficients = coefficients.cwiseProduct(row);
    const CVector<Real> synthesized = detail::centered_dft<Real>(coefficients, +1);
    for (int k = 0; k < n; ++k) out[k] += synthesized[k] * detail::wrapped_gaussian(grid, k, j);
  }
  return {grid, psi.hbar, out * (norm * dx * dp)};
}

/// <z>^s = (1 + x^2 + p^2)^{s/2}.
template <class Real>
SampledSymbol<Real> japanese_bracket_symbol(const UniformGrid<Real>& grid, Real hbar, Real s) {
  return sample_symbol<Real>([&](Real x, Real p) { return std::pow(1 + x * x + p * p, s / 2); }, grid, hbar);
}

/// ||Op_AW(<z>^s) psi||.
template <class Real>
Real q_norm_estimate(const SampledWavefunction<Real>& psi, Real s) {
  detail::require_unit_hbar(psi.hbar);
  return antiwick_apply(japanese_bracket_symbol(psi.grid, psi.hbar, s), psi).norm();
}

}  // namespace bjcalc::numeric
