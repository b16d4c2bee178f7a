#pragma once

#include "bjcalc/aux_poly.hpp"
#include "bjcalc/poly.hpp"
#include "bjcalc/weyl_algebra.hpp"

#include <variant>

namespace bjcalc {

struct Weyl {};
struct BornJordan {};
/// Shubin's tau-rule at a fixed rational tau. Tau{1/2} coincides with Weyl.
struct Tau {
  Rational value;
};
/// Tau kept as a formal variable; results are polynomials in tau.
struct FormalTau {};

using Scheme = std::variant<Weyl, BornJordan, Tau>;

using TauOpPoly = AuxPoly<OpPoly>;
using TauSymbolPoly = AuxPoly<SymbolPoly>;
using TauAmplitudePoly = AuxPoly<AmplitudePoly>;

/// Normal-ordered image of p^s x^r (one dimension) under a quantization rule.
/// Born-Jordan uses the equal-weight rule (1/(s+1)) sum_l p^(s-l) x^r p^l.
OpPoly quantize_monomial(const Scheme& scheme, unsigned r, unsigned s);
TauOpPoly quantize_monomial(FormalTau, unsigned r, unsigned s);

/// Linear extension to polynomial symbols. Multi-dimensional monomials are the
/// product over dimensions of the one-dimensional tau-rule with a shared tau;
/// Born-Jordan is the unit-interval average of that product.
OpPoly quantize_symbol(const Scheme& scheme, const SymbolPoly& a);
TauOpPoly quantize_symbol(FormalTau, const SymbolPoly& a);
TauOpPoly quantize_symbol(FormalTau, const TauSymbolPoly& a);

/// Coefficientwise integral over tau in [0, 1].
OpPoly tau_average(const TauOpPoly& a);

/// b(x, y, p) = int_0^1 a((1 - tau) x + tau y, p) dtau.
AmplitudePoly amplitude_average(const SymbolPoly& a);

/// Exact tau-symbol of the operator with amplitude b (finite sum for
/// polynomial amplitudes).
SymbolPoly amplitude_to_tau_symbol(const AmplitudePoly& b, const Rational& tau);
TauSymbolPoly amplitude_to_tau_symbol(const AmplitudePoly& b, FormalTau);

/// Tau as a scalar auxiliary polynomial: the constant `tau`, or the formal
/// variable.
AuxScalar tau_value(const Rational& tau);
AuxScalar tau_value(FormalTau);

/// Substitutes `replacement` for the variable `var` of `a`, after embedding `a`
/// in the Target layout. Coefficients of the replacement may depend on the
/// auxiliary variable.
template <class Target, class Source>
AuxPoly<Poly<Target>> substitute_affine(const Poly<Source>& a, Var var,
                                        const AuxPoly<Poly<Target>>& replacement) {
  const unsigned n = a.dimension();
  const Poly<Target> zero(n);
  const Poly<Target> embedded = embed<Target>(a);
  const std::size_t s = embedded.slot(var);
  AuxPoly<Poly<Target>> out(zero);
  std::vector<AuxPoly<Poly<Target>>> powers{lift(Poly<Target>::constant(n, ExactScalar(1)), zero)};
  for (const auto& [e, c] : embedded.terms()) {
    while (powers.size() <= e[s]) powers.push_back(powers.back() * replacement);
    Exponents rest = e;
    rest[s] = 0;
    out += lift(Poly<Target>::monomial(n, rest, c), zero) * powers[e[s]];
  }
  return out;
}

/// Same substitution applied to each auxiliary coefficient of `a`.
template <class Layout>
AuxPoly<Poly<Layout>> substitute_affine(const AuxPoly<Poly<Layout>>& a, Var var,
                                        const AuxPoly<Poly<Layout>>& replacement) {
  AuxPoly<Poly<Layout>> out(a.zero());
  for (const auto& [k, c] : a.coefficients()) {
    AuxPoly<Poly<Layout>> term = substitute_affine<Layout>(c, var, replacement);
    AuxPoly<Poly<Layout>> shifted(a.zero());
    for (const auto& [m, d] : term.coefficients()) shifted.add(m + k, d);
    out += shifted;
  }
  return out;
}

}  // namespace bjcalc
