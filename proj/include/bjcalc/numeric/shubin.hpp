#pragma once

#include "bjcalc/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

namespace bjcalc::numeric {

struct ShubinOrderEstimate {
  double m_est = 0;
  std::optional<double> rho_est;
  double residual = 0;
};

namespace detail {

struct LineFit {
  double slope;
  double residual;
};

inline LineFit fit_line(const std::vector<double>& t, const std::vector<double>& y) {
  const Eigen::Index n = static_cast<Eigen::Index>(t.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    design(k, 0) = 1;
    design(k, 1) = t[k];
    rhs[k] = y[k];
  }
  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(rhs);
  return {coef[1], (design * coef - rhs).norm() / std::sqrt(static_cast<double>(n))};
}

}  // namespace detail

/// Log-log fit of max_{|z|=r} |a(z)| against <r>; rho from the matching fit of the
/// finite-difference gradient, when the gradient is not identically zero.
template <class Symbol>
ShubinOrderEstimate estimate_shubin_order(const Symbol& a, const std::vector<double>& radii, int angles = 256) {
  if (radii.size() < 3) throw Error("order estimate needs at least three radii");
  for (std::size_t k = 0; k < radii.size(); ++k)
    if (!(radii[k] > 0) || (k && !(radii[k] > radii[k - 1]))) throw Error("radii must be positive and increasing");
  auto value = [&](double x, double p) {
    const double v = std::abs(std::complex<double>(a(x, p)));
    if (!std::isfinite(v)) throw Error("symbol evaluator returned a non-finite value");
    return v;
  };
  std::vector<double> log_bracket, log_value, log_gradient;
  bool gradient_vanishes = false;
  for (double r : radii) {
    double peak = 0;
    double slope_peak = 0;
    const double h = 1e-4 * std::max(1.0, r);
    for (int k = 0; k < angles; ++k) {
      const double theta = 2 * std::numbers::pi * k / angles;
      const double x = r * std::cos(theta);
      const double p = r * std::sin(theta);
      peak = std::max(peak, value(x, p));
      const std::complex<double> dx =
          (std::complex<double>(a(x + h, p)) - std::complex<double>(a(x - h, p))) / (2 * h);
      const std::complex<double> dp =
          (std::complex<double>(a(x, p + h)) - std::complex<double>(a(x, p - h))) / (2 * h);
      slope_peak = std::max(slope_peak, std::hypot(std::abs(dx), std::abs(dp)));
    }
    if (!(peak > 0)) throw Error("symbol vanishes on a sampling circle");
    log_bracket.push_back(0.5 * std::log1p(r * r));
    log_value.push_back(std::log(peak));
    if (slope_peak <= 1e-9 * peak) gradient_vanishes = true;
    log_gradient.push_back(std::log(std::max(slope_peak, 1e-300)));
  }
  const detail::LineFit order = detail::fit_line(log_bracket, log_value);
  ShubinOrderEstimate out{order.slope, std::nullopt, order.residual};
  if (!gradient_vanishes) out.rho_est = order.slope - detail::fit_line(log_bracket, log_gradient).slope;
  return out;
}

}  // namespace bjcalc::numeric
