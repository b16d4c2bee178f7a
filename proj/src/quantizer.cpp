#include "bjcalc/quantizer.hpp"

#include <functional>
#include <map>
#include <optional>

namespace bjcalc {
namespace {

/// sum_l weight(l) * phat^(s-l) xhat^r phat^l, normal ordered.
template <class Weight>
OpPoly ordered_sum(unsigned r, unsigned s, const Weight& weight) {
  OpPoly out(1);
  for (unsigned l = 0; l <= s; ++l) {
    const OpPoly word = OpPoly::normal_monomial(1, {0, s - l}) * OpPoly::normal_monomial(1, {r, l});
    out = out + word * weight(l);
  }
  return out;
}

TauOpPoly tau_rule(unsigned r, unsigned s, const AuxScalar& tau) {
  const AuxScalar one_minus_tau = aux_constant(ExactScalar(1)) - tau;
  const OpPoly zero(1);
  TauOpPoly out(zero);
  for (unsigned l = 0; l <= s; ++l) {
    const OpPoly word = OpPoly::normal_monomial(1, {0, s - l}) * OpPoly::normal_monomial(1, {r, l});
    const AuxScalar weight =
        pow(one_minus_tau, l) * pow(tau, s - l) * ExactScalar(Rational(binomial(s, l)));
    out += scale(lift(word, zero), weight);
  }
  return out;
}

OpPoly embed_value(const OpPoly& v, unsigned n, unsigned j) { return embed(v, n, j); }

TauOpPoly embed_value(const TauOpPoly& v, unsigned n, unsigned j) {
  TauOpPoly out{OpPoly(n)};
  for (const auto& [k, c] : v.coefficients()) out.add(k, embed(c, n, j));
  return out;
}

/// Product over dimensions of per-dimension monomial operators, with a cache
/// of the one-dimensional images keyed by (r, s).
template <class Value, class OneDim>
Value tensor_quantize(const SymbolPoly& a, const Value& zero, const Value& one, const OneDim& one_dim) {
  const unsigned n = a.dimension();
  std::map<std::pair<unsigned, unsigned>, Value> cache;
  auto monomial = [&](unsigned r, unsigned s) -> const Value& {
    auto key = std::make_pair(r, s);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, one_dim(r, s)).first;
    return it->second;
  };
  Value out = zero;
  for (const auto& [e, c] : a.terms()) {
    Value product = one;
    for (unsigned j = 0; j < n; ++j) {
      if (e[j] == 0 && e[n + j] == 0) continue;
      product = product * embed_value(monomial(e[j], e[n + j]), n, j);
    }
    out = out + product * c;
  }
  return out;
}

TauOpPoly quantize_with_tau(const SymbolPoly& a, const AuxScalar& tau) {
  const unsigned n = a.dimension();
  const OpPoly zero(n);
  return tensor_quantize<TauOpPoly>(a, TauOpPoly(zero), lift(OpPoly::constant(n, ExactScalar(1)), zero),
                                    [&](unsigned r, unsigned s) { return tau_rule(r, s, tau); });
}

}  // namespace

AuxScalar tau_value(const Rational& tau) { return aux_constant(ExactScalar(tau)); }
AuxScalar tau_value(FormalTau) { return aux_variable(); }

OpPoly quantize_monomial(const Scheme& scheme, unsigned r, unsigned s) {
  return std::visit(
      [&](const auto& rule) -> OpPoly {
        using Rule = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<Rule, BornJordan>) {
          const ExactScalar w(Rational(1, s + 1));
          return ordered_sum(r, s, [&](unsigned) { return w; });
        } else if constexpr (std::is_same_v<Rule, Weyl>) {
          const Rational scale = Rational(1) / Rational(BigInt(1) << s);
          return ordered_sum(r, s, [&](unsigned l) { return ExactScalar(Rational(binomial(s, l)) * scale); });
        } else {
          return tau_rule(r, s, tau_value(rule.value)).collapse();
        }
      },
      scheme);
}

TauOpPoly quantize_monomial(FormalTau, unsigned r, unsigned s) { return tau_rule(r, s, aux_variable()); }

OpPoly quantize_symbol(const Scheme& scheme, const SymbolPoly& a) {
  const unsigned n = a.dimension();
  return std::visit(
      [&](const auto& rule) -> OpPoly {
        using Rule = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<Rule, BornJordan>) {
          return tau_average(quantize_with_tau(a, aux_variable()));
        } else if constexpr (std::is_same_v<Rule, Weyl>) {
          return tensor_quantize<OpPoly>(a, OpPoly(n), OpPoly::constant(n, ExactScalar(1)),
                                         [](unsigned r, unsigned s) { return quantize_monomial(Weyl{}, r, s); });
        } else {
          return quantize_with_tau(a, tau_value(rule.value)).collapse();
        }
      },
      scheme);
}

TauOpPoly quantize_symbol(FormalTau, const SymbolPoly& a) { return quantize_with_tau(a, aux_variable()); }

TauOpPoly quantize_symbol(FormalTau, const TauSymbolPoly& a) {
  const unsigned n = a.zero().dimension();
  TauOpPoly out{OpPoly(n)};
  for (const auto& [k, c] : a.coefficients()) {
    const TauOpPoly q = quantize_with_tau(c, aux_variable());
    for (const auto& [m, d] : q.coefficients()) out.add(m + k, d);
  }
  return out;
}

OpPoly tau_average(const TauOpPoly& a) { return integrate_unit_interval(a); }

AmplitudePoly amplitude_average(const SymbolPoly& a) {
  const unsigned n = a.dimension();
  const AmplitudePoly zero(n);
  const AuxScalar tau = aux_variable();
  const AuxScalar one_minus_tau = aux_constant(ExactScalar(1)) - tau;
  TauAmplitudePoly current = lift(embed<AmplitudeLayout>(a), zero);
  for (unsigned j = 0; j < n; ++j) {
    // x_j -> (1 - tau) x_j + tau y_j
    const TauAmplitudePoly replacement =
        scale(lift(AmplitudePoly::variable(n, Var::x(j)), zero), one_minus_tau) +
        scale(lift(AmplitudePoly::variable(n, Var::y(j)), zero), tau);
    current = substitute_affine(current, Var::x(j), replacement);
  }
  return integrate_unit_interval(current);
}

namespace {

TauSymbolPoly amplitude_to_tau_symbol_impl(const AmplitudePoly& b, const AuxScalar& tau) {
  const unsigned n = b.dimension();
  const SymbolPoly zero(n);
  const AuxScalar one_minus_tau = aux_constant(ExactScalar(1)) - tau;
  const MultiIndex x_bound = b.block_degrees(VarKind::x);
  const MultiIndex y_bound = b.block_degrees(VarKind::y);
  const MultiIndex p_bound = b.block_degrees(VarKind::p);
  TauSymbolPoly out(zero);
  for_each_below(x_bound, [&](const MultiIndex& beta) {
    for_each_below(y_bound, [&](const MultiIndex& gamma) {
      const MultiIndex total = beta + gamma;
      for (unsigned j = 0; j < n; ++j)
        if (total[j] > p_bound[j]) return;
      AmplitudePoly d = b;
      for (unsigned j = 0; j < n && !d.is_zero(); ++j) {
        if (beta[j]) d = differentiate(d, Var::x(j), beta[j]);
        if (gamma[j]) d = differentiate(d, Var::y(j), gamma[j]);
        if (total[j]) d = differentiate(d, Var::p(j), total[j]);
      }
      if (d.is_zero()) return;
      // (i hbar)^|beta| (-i hbar)^|gamma| / (beta! gamma!)
      ExactScalar c = ExactScalar::i_hbar(total.order()) *
                      ExactScalar(Rational(1) / Rational(beta.factorial() * gamma.factorial()));
      if (gamma.order() % 2 == 1) c = -c;
      const AuxScalar weight = pow(tau, beta.order()) * pow(one_minus_tau, gamma.order()) * c;
      out += scale(lift(restrict_diagonal(d), zero), weight);
    });
  });
  return out;
}

}  // namespace

SymbolPoly amplitude_to_tau_symbol(const AmplitudePoly& b, const Rational& tau) {
  return amplitude_to_tau_symbol_impl(b, tau_value(tau)).collapse();
}

TauSymbolPoly amplitude_to_tau_symbol(const AmplitudePoly& b, FormalTau) {
  return amplitude_to_tau_symbol_impl(b, aux_variable());
}

}  // namespace bjcalc
