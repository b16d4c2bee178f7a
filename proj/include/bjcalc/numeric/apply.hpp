#pragma once

#include "bjcalc/numeric/quadrature.hpp"
#include "bjcalc/numeric/sampling.hpp"
#include "bjcalc/rational.hpp"

#include <map>
#include <variant>

namespace bjcalc::numeric {

struct WeylScheme {};
template <class Real>
struct TauScheme {
  Real tau;
};
struct BjQuadrature {
  int order = 16;
};
struct BjSinc {};

template <class Real>
using NumericScheme = std::variant<WeylScheme, TauScheme<Real>, BjQuadrature, BjSinc>;

namespace detail {

/// Kernel (1/2 pi hbar) sum_p e^{ip(x-y)/hbar} a((1-tau)x + tau y, p) applied by quadrature
/// in y. The symbol is Fourier-interpolated along x, so for each x-frequency the
/// y-sum is a circular convolution.
template <class Real>
CVector<Real> apply_tau_sampled(const SampledSymbol<Real>& a, const CVector<Real>& psi, Real tau) {
  const UniformGrid<Real>& grid = a.grid;
  const int n = grid.size();
  const Real two_pi = 2 * std::numbers::pi_v<Real>;
  const Real kernel_scale = grid.momentum_spacing(a.hbar) / (two_pi * a.hbar);

  CMatrix<Real> coeffs(n, n);
  for (int m = 0; m < n; ++m) coeffs.col(m) = fft<Real>(a.values.col(m)) / Real(n);

  CVector<Real> out = CVector<Real>::Zero(n);
  for (int nu = 0; nu < n; ++nu) {
    const CVector<Real> row = coeffs.row(nu).transpose();
    if (row.isZero(0)) continue;
    CVector<Real> kernel = ifft_unscaled<Real>(row) * kernel_scale;
    for (int q = 1; q < n; q += 2) kernel[q] = -kernel[q];
    const CVector<Real> kernel_spectrum = fft<Real>(kernel);

    // The Nyquist bin is split evenly between +N/2 and -N/2.
    const bool nyquist = nu == n / 2;
    for (int f : nyquist ? std::vector<int>{n / 2, -n / 2} : std::vector<int>{frequency(nu, n)}) {
      CVector<Real> g(n);
      for (int k = 0; k < n; ++k) g[k] = std::polar(Real(1), two_pi * f * tau * k / n) * psi[k];
      const CVector<Real> conv = ifft_unscaled<Real>(kernel_spectrum.cwiseProduct(fft<Real>(g))) / Real(n);
      const Real weight = nyquist ? Real(0.5) : Real(1);
      for (int j = 0; j < n; ++j) out[j] += weight * std::polar(Real(1), two_pi * f * (1 - tau) * j / n) * conv[j];
    }
  }
  return out * grid.spacing();
}

/// Exact tau-rule on a polynomial symbol with spectral momentum:
/// x^r p^s -> sum_t C(r,t) (1-tau)^t tau^(r-t) x^t P^s x^(r-t).
template <class Real>
CVector<Real> apply_tau_polynomial(const SymbolPoly& a, const SampledWavefunction<Real>& psi, Real tau) {
  if (a.dimension() != 1) throw DimensionError("numeric application needs a one-dimensional symbol");
  const int n = psi.grid.size();
  const RVector<Real> x = psi.grid.points();
  std::map<unsigned, CVector<Real>> x_powers;  // x^k psi
  auto times_x_power = [&](const CVector<Real>& v, unsigned k) {
    CVector<Real> out = v;
    for (int j = 0; j < n; ++j) out[j] *= std::pow(x[j], static_cast<int>(k));
    return out;
  };
  auto x_power_psi = [&](unsigned k) -> const CVector<Real>& {
    auto it = x_powers.find(k);
    if (it == x_powers.end()) it = x_powers.emplace(k, times_x_power(psi.values, k)).first;
    return it->second;
  };
  CVector<Real> out = CVector<Real>::Zero(n);
  for (const auto& [e, c] : a.terms()) {
    const unsigned r = e[0];
    const unsigned s = e[1];
    const Complex<Real> coeff = evaluate<Real>(c, psi.hbar);
    for (unsigned t = 0; t <= r; ++t) {
      const Real weight = binomial(r, t).template convert_to<Real>() * std::pow(1 - tau, static_cast<int>(t)) *
                          std::pow(tau, static_cast<int>(r - t));
      if (weight == 0) continue;
      const CVector<Real> moved = momentum_power<Real>(x_power_psi(r - t), s, psi.hbar, psi.grid.length());
      out += (coeff * weight) * times_x_power(moved, t);
    }
  }
  return out;
}

template <class Real>
void check_params(const SampledWavefunction<Real>& psi, const NumericParams<Real>& params) {
  check_state(psi);
  if (params.hbar != psi.hbar) throw GridError("wavefunction hbar differs from the requested hbar");
  warn_boundary(psi, params);
}

template <class Real, class TauApply>
CVector<Real> tau_average(int order, const TauApply& apply) {
  const auto [nodes, weights] = gauss_legendre<Real>(order);
  CVector<Real> out = weights[0] * apply(nodes[0]);
  for (int k = 1; k < order; ++k) out += weights[k] * apply(nodes[k]);
  return out;
}

}  // namespace detail

template <class Real>
SampledWavefunction<Real> apply_operator(const SampledSymbol<Real>& a, const SampledWavefunction<Real>& psi,
                                         const std::type_identity_t<NumericScheme<Real>>& scheme,
                                         const NumericParams<Real>& params) {
  detail::check_symbol(a);
  detail::check_compatible(a, psi);
  detail::check_params(psi, params);
  const CVector<Real> out = std::visit(
      [&](const auto& rule) -> CVector<Real> {
        using Rule = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<Rule, WeylScheme>) {
          return detail::apply_tau_sampled<Real>(a, psi.values, Real(0.5));
        } else if constexpr (std::is_same_v<Rule, TauScheme<Real>>) {
          return detail::apply_tau_sampled<Real>(a, psi.values, rule.tau);
        } else if constexpr (std::is_same_v<Rule, BjQuadrature>) {
          return detail::tau_average<Real>(rule.order,
                                           [&](Real tau) { return detail::apply_tau_sampled<Real>(a, psi.values, tau); });
        } else {
          return detail::apply_tau_sampled<Real>(bj_weyl_symbol_numeric(a), psi.values, Real(0.5));
        }
      },
      scheme);
  return {psi.grid, psi.hbar, out};
}

/// Polynomial symbols use the exact ordering rule for weyl, tau and bj_quadrature;
/// bj_sinc samples a tapered copy and goes through the sinc multiplier.
template <class Real>
SampledWavefunction<Real> apply_operator(const SymbolPoly& a, const SampledWavefunction<Real>& psi,
                                         const std::type_identity_t<NumericScheme<Real>>& scheme,
                                         const NumericParams<Real>& params) {
  detail::check_params(psi, params);
  const CVector<Real> out = std::visit(
      [&](const auto& rule) -> CVector<Real> {
        using Rule = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<Rule, WeylScheme>) {
          return detail::apply_tau_polynomial<Real>(a, psi, Real(0.5));
        } else if constexpr (std::is_same_v<Rule, TauScheme<Real>>) {
          return detail::apply_tau_polynomial<Real>(a, psi, rule.tau);
        } else if constexpr (std::is_same_v<Rule, BjQuadrature>) {
          return detail::tau_average<Real>(rule.order,
                                           [&](Real tau) { return detail::apply_tau_polynomial<Real>(a, psi, tau); });
        } else {
          const SampledSymbol<Real> sampled = sample_polynomial<Real>(a, psi.grid, psi.hbar);
          return detail::apply_tau_sampled<Real>(bj_weyl_symbol_numeric(sampled), psi.values, Real(0.5));
        }
      },
      scheme);
  return {psi.grid, psi.hbar, out};
}

}  // namespace bjcalc::numeric
