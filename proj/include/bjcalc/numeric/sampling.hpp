#pragma once

#include "bjcalc/numeric/transforms.hpp"
#include "bjcalc/poly.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <random>

namespace bjcalc::numeric {

template <class Real>
Complex<Real> evaluate(const ExactScalar& c, Real hbar) {
  Complex<Real> out = 0;
  for (const auto& [power, value] : c.terms())
    out += Complex<Real>(value.re.template convert_to<Real>(), value.im.template convert_to<Real>()) *
           std::pow(hbar, static_cast<int>(power));
  return out;
}

template <class Real>
Complex<Real> evaluate(const SymbolPoly& a, Real x, Real p, Real hbar) {
  if (a.dimension() != 1) throw DimensionError("numeric evaluation needs a one-dimensional symbol");
  Complex<Real> out = 0;
  for (const auto& [e, c] : a.terms())
    out += evaluate<Real>(c, hbar) * std::pow(x, static_cast<int>(e[0])) * std::pow(p, static_cast<int>(e[1]));
  return out;
}

template <class Real, class Symbol>
SampledSymbol<Real> sample_symbol(const Symbol& a, const UniformGrid<Real>& grid, Real hbar) {
  const int n = grid.size();
  CMatrix<Real> values(n, n);
  for (int m = 0; m < n; ++m)
    for (int j = 0; j < n; ++j) values(j, m) = Complex<Real>(a(grid.point(j), grid.momentum(m, hbar)));
  return {grid, hbar, values};
}

/// Smooth cutoff 1/2 erfc((|v| - c)/s).
template <class Real>
Real window(Real v, Real center, Real width) {
  return boost::math::erfc((std::abs(v) - center) / width) / 2;
}

/// Samples a polynomial symbol, optionally tapered to zero near the edges of
/// both axes so that the periodic transforms see a smooth function.
template <class Real>
SampledSymbol<Real> sample_polynomial(const SymbolPoly& a, const UniformGrid<Real>& grid, Real hbar,
                                      bool windowed = true) {
  const Real x_half = grid.length() / 2;
  const Real p_half = grid.size() * grid.momentum_spacing(hbar) / 2;
  return sample_symbol<Real>(
      [&](Real x, Real p) {
        Complex<Real> v = evaluate<Real>(a, x, p, hbar);
        if (windowed)
          v *= window(x, Real(0.75) * x_half, Real(0.04) * x_half) * window(p, Real(0.75) * p_half, Real(0.04) * p_half);
        return v;
      },
      grid, hbar);
}

/// (pi hbar)^{-1/4} e^{-(x-x0)^2/2hbar} e^{i p0 x/hbar}.
template <class Real>
SampledWavefunction<Real> gaussian_state(const UniformGrid<Real>& grid, Real hbar, PhasePoint<Real> center = {}) {
  const int n = grid.size();
  CVector<Real> v(n);
  const Real scale = std::pow(std::numbers::pi_v<Real> * hbar, Real(-0.25));
  for (int k = 0; k < n; ++k) {
    const Real d = grid.point(k) - center.x;
    v[k] = scale * std::exp(-d * d / (2 * hbar)) * std::polar(Real(1), center.p * grid.point(k) / hbar);
  }
  return {grid, hbar, v};
}

/// Normalized k-th Hermite function, via the three-term recurrence.
template <class Real>
SampledWavefunction<Real> hermite_state(const UniformGrid<Real>& grid, Real hbar, int k) {
  if (k < 0) throw GridError("Hermite index must be non-negative");
  const int n = grid.size();
  CVector<Real> v(n);
  const Real scale = std::pow(std::numbers::pi_v<Real> * hbar, Real(-0.25));
  for (int j = 0; j < n; ++j) {
    const Real xi = grid.point(j) / std::sqrt(hbar);
    Real prev = 0;
    Real cur = scale * std::exp(-xi * xi / 2);
    for (int level = 0; level < k; ++level) {
      const Real next = std::sqrt(Real(2) / (level + 1)) * xi * cur - std::sqrt(Real(level) / (level + 1)) * prev;
      prev = cur;
      cur = next;
    }
    v[j] = cur;
  }
  return {grid, hbar, v};
}

/// Result of snapping a requested null-symbol center to the phase-space grid.
template <class Real>
struct NullSymbol {
  SampledSymbol<Real> symbol;
  PhasePoint<Real> center;
};

/// c(z) = e^{-i sigma(z, z0)/hbar} with z0 snapped to grid points. When p0 x0 is
/// a nonzero multiple of 2 pi hbar, c_sigma sits on a zero of the sinc kernel.
template <class Real>
NullSymbol<Real> null_symbol(const UniformGrid<Real>& grid, Real hbar, PhasePoint<Real> requested) {
  const Real dx = grid.spacing();
  const Real dp = grid.momentum_spacing(hbar);
  const PhasePoint<Real> z0{std::round(requested.x / dx) * dx, std::round(requested.p / dp) * dp};
  if (!(std::abs(z0.x) < grid.length() / 2) || !(std::abs(z0.p) < grid.size() * dp / 2))
    throw GridError("null-symbol center lies outside the phase-space box");
  return {sample_symbol<Real>([&](Real x, Real p) { return std::polar(Real(1), -(p * z0.x - x * z0.p) / hbar); },
                              grid, hbar),
          z0};
}

/// Null-symbol center with p0 x0 = 2 pi hbar * multiple, exactly on the grid.
template <class Real>
PhasePoint<Real> default_null_center(const UniformGrid<Real>& grid, Real hbar, int multiple = 1) {
  const int k0 = grid.size() / 16;
  return {k0 * grid.spacing(), 16 * multiple * grid.momentum_spacing(hbar)};
}

/// Largest ||A psi|| / ||psi|| over random normalized inputs.
template <class Real, class Operator>
Real operator_norm_probe(const Operator& apply, const UniformGrid<Real>& grid, Real hbar, int trials,
                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Real best = 0;
  for (int t = 0; t < trials; ++t) {
    CVector<Real> v(grid.size());
    for (auto& value : v) value = Complex<Real>(Real(normal(rng)), Real(normal(rng)));
    SampledWavefunction<Real> psi{grid, hbar, v};
    psi.values /= psi.norm();
    best = std::max(best, apply(psi).norm());
  }
  return best;
}

}  // namespace bjcalc::numeric
