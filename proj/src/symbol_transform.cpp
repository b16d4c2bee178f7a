#include "bjcalc/symbol_transform.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace bjcalc {
namespace {

ExactScalar half_i_hbar(unsigned k) {
  return ExactScalar::i_hbar(k) * ExactScalar(Rational(1) / Rational(BigInt(1) << k));
}

/// 1 / (alpha! (|alpha| + 1)), the Taylor coefficient of sinh-type series.
Rational series_weight(const MultiIndex& alpha) {
  return Rational(1) / Rational(alpha.factorial() * (alpha.order() + 1));
}

/// sum_alpha coeff(alpha) d_x^alpha d_p^alpha a, over the multi-indices that
/// can survive differentiation. coeff returns nullopt for skipped alpha.
template <class Coeff>
TauSymbolPoly diagonal_series(const SymbolPoly& a, const Coeff& coeff, Truncation truncation) {
  const unsigned n = a.dimension();
  const SymbolPoly zero(n);
  MultiIndex bound(n);
  for (unsigned j = 0; j < n; ++j) bound[j] = std::min(a.degree_in(Var::x(j)), a.degree_in(Var::p(j)));
  TauSymbolPoly out(zero);
  for_each_below(bound, [&](const MultiIndex& alpha) {
    if (truncation && alpha.order() > *truncation) return;
    const std::optional<AuxScalar> c = coeff(alpha);
    if (!c || c->is_zero()) return;
    const SymbolPoly d = differentiate_diagonal(a, alpha);
    if (d.is_zero()) return;
    out += scale(lift(d, zero), *c);
  });
  return out;
}

/// Recursion behind c_alpha: f(beta) = -sum_gamma w(gamma) f(beta - gamma)
/// over nonzero even-order gamma <= beta, f(0) = 1. Unrolling the recursion
/// enumerates exactly the ordered compositions with sign (-1)^(parts).
class CompositionSums {
 public:
  const Rational& get(const MultiIndex& beta) {
    auto it = memo_.find(beta);
    if (it != memo_.end()) return it->second;
    Rational total = 0;
    if (beta.is_zero()) {
      total = 1;
    } else {
      for_each_below(beta, [&](const MultiIndex& gamma) {
        const unsigned order = gamma.order();
        if (order == 0 || order % 2 != 0) return;
        MultiIndex rest = beta;
        for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= gamma[j];
        total -= series_weight(gamma) * get(rest);
      });
    }
    return memo_.emplace(beta, std::move(total)).first->second;
  }

 private:
  std::map<MultiIndex, Rational> memo_;
};

void check_cap(unsigned order, unsigned cap) {
  if (order > cap)
    throw ResourceError("coefficient order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
}

}  // namespace

Rational bernoulli(unsigned k) {
  // sum_{j=0}^{m} C(m+1, j) B_j = 0
  std::vector<Rational> b(k + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= k; ++m) {
    Rational sum = 0;
    for (unsigned j = 0; j < m; ++j) sum += Rational(binomial(m + 1, j)) * b[j];
    b[m] = -sum / Rational(m + 1);
  }
  return b[k];
}

Rational c_coefficient(unsigned k) {
  if (k % 2 == 1) return 0;
  return (Rational(2) - Rational(BigInt(1) << k)) * bernoulli(k);
}

Rational c_coefficient(const MultiIndex& alpha, unsigned cap) {
  check_cap(alpha.order(), cap);
  CompositionSums sums;
  return Rational(alpha.factorial()) * sums.get(alpha);
}

CoeffTable::CoeffTable(unsigned dimension, unsigned max_order, unsigned cap)
    : dimension_(dimension), max_order_(max_order) {
  check_cap(max_order, cap);
  CompositionSums sums;
  MultiIndex bound(dimension);
  for (unsigned j = 0; j < dimension; ++j) bound[j] = max_order;
  for_each_below(bound, [&](const MultiIndex& alpha) {
    if (alpha.order() > max_order) return;
    values_.emplace(alpha, Rational(alpha.factorial()) * sums.get(alpha));
  });
}

const Rational& CoeffTable::at(const MultiIndex& alpha) const {
  auto it = values_.find(alpha);
  if (it == values_.end()) throw ResourceError("multi-index outside the precomputed coefficient table");
  return it->second;
}

SymbolPoly bj_to_weyl(const SymbolPoly& a, Truncation truncation) {
  return diagonal_series(
             a,
             [](const MultiIndex& alpha) -> std::optional<AuxScalar> {
               if (alpha.order() % 2 != 0) return std::nullopt;
               return aux_constant(half_i_hbar(alpha.order()) * ExactScalar(series_weight(alpha)));
             },
             truncation)
      .collapse();
}

SymbolPoly weyl_to_bj(const SymbolPoly& a, Truncation truncation) {
  const unsigned n = a.dimension();
  unsigned order = 0;
  for (unsigned j = 0; j < n; ++j) order += std::min(a.degree_in(Var::x(j)), a.degree_in(Var::p(j)));
  if (truncation) order = std::min(order, *truncation);
  const CoeffTable table(n, order);
  return diagonal_series(
             a,
             [&](const MultiIndex& alpha) -> std::optional<AuxScalar> {
               if (alpha.order() % 2 != 0) return std::nullopt;
               const Rational c = table.at(alpha) / Rational(alpha.factorial());
               return aux_constant(half_i_hbar(alpha.order()) * ExactScalar(c));
             },
             truncation)
      .collapse();
}

namespace {

TauSymbolPoly bj_to_tau_impl(const SymbolPoly& a, const AuxScalar& tau, Truncation truncation) {
  const AuxScalar tau_minus_one = tau - aux_constant(ExactScalar(1));
  return diagonal_series(
      a,
      [&](const MultiIndex& alpha) -> std::optional<AuxScalar> {
        const unsigned k = alpha.order();
        const AuxScalar bracket = pow(tau, k + 1) - pow(tau_minus_one, k + 1);
        return bracket * (ExactScalar::i_hbar(k) * ExactScalar(series_weight(alpha)));
      },
      truncation);
}

}  // namespace

SymbolPoly bj_to_tau(const SymbolPoly& a, const Rational& tau, Truncation truncation) {
  return bj_to_tau_impl(a, tau_value(tau), truncation).collapse();
}

TauSymbolPoly bj_to_tau(const SymbolPoly& a, FormalTau, Truncation truncation) {
  return bj_to_tau_impl(a, tau_value(FormalTau{}), truncation);
}

SymbolPoly tau_shift(const SymbolPoly& a, const Rational& from_tau, const Rational& to_tau,
                     Truncation truncation) {
  const Rational delta = to_tau - from_tau;
  return diagonal_series(
             a,
             [&](const MultiIndex& alpha) -> std::optional<AuxScalar> {
               const unsigned k = alpha.order();
               const Rational c = bjcalc::pow(delta, k) / Rational(alpha.factorial());
               return aux_constant(ExactScalar::i_hbar(k) * ExactScalar(c));
             },
             truncation)
      .collapse();
}

SymbolPoly monomial_closed_form(MonomialDirection direction, unsigned r, unsigned s) {
  SymbolPoly out(1);
  for (unsigned k = 0; k <= std::min(r, s); k += 2) {
    Rational weight = direction == MonomialDirection::weyl_of_bj
                          ? Rational(factorial(k)) / Rational(k + 1)
                          : Rational(factorial(k)) * c_coefficient(k);
    weight *= Rational(binomial(r, k) * binomial(s, k));
    out.add_term({r - k, s - k}, half_i_hbar(k) * ExactScalar(weight));
  }
  return out;
}

}  // namespace bjcalc
