#pragma once

#include "bjcalc/aux_poly.hpp"
#include "bjcalc/multi_index.hpp"
#include "bjcalc/poly.hpp"
#include "bjcalc/quantizer.hpp"

#include <map>
#include <optional>

namespace bjcalc {

/// Bernoulli number of the first kind (B_1 = -1/2).
Rational bernoulli(unsigned k);

/// Taylor coefficients c_k = d^k/dx^k (x / sinh x) at 0, i.e. (2 - 2^k) B_k
/// for even k and zero for odd k.
Rational c_coefficient(unsigned k);

inline constexpr unsigned kDefaultCoefficientCap = 12;

/// Multi-index coefficients of the formal reciprocal of
///   sum_{|alpha| even} x^alpha / (alpha! (|alpha| + 1)),
/// computed by summing over ordered compositions of alpha into nonzero
/// even-order parts. Throws ResourceError when |alpha| exceeds `cap`.
Rational c_coefficient(const MultiIndex& alpha, unsigned cap = kDefaultCoefficientCap);

/// All c_alpha with |alpha| <= max_order in a fixed dimension, computed once.
class CoeffTable {
 public:
  CoeffTable(unsigned dimension, unsigned max_order, unsigned cap = kDefaultCoefficientCap);

  unsigned dimension() const { return dimension_; }
  unsigned max_order() const { return max_order_; }
  const Rational& at(const MultiIndex& alpha) const;
  const std::map<MultiIndex, Rational>& values() const { return values_; }

 private:
  unsigned dimension_;
  unsigned max_order_;
  std::map<MultiIndex, Rational> values_;
};

/// Optional cut-off on |alpha| for the derivative expansions. Unset means the
/// full sum, which terminates on polynomials.
using Truncation = std::optional<unsigned>;

/// Weyl symbol of Op_BJ(a):
///   sum_{|alpha| even} (i hbar / 2)^|alpha| / (alpha! (|alpha| + 1)) d_x^alpha d_p^alpha a.
SymbolPoly bj_to_weyl(const SymbolPoly& a, Truncation truncation = {});

/// Born-Jordan symbol of Op_W(a):
///   sum_{|alpha| even} c_alpha / alpha! (i hbar / 2)^|alpha| d_x^alpha d_p^alpha a.
SymbolPoly weyl_to_bj(const SymbolPoly& a, Truncation truncation = {});

/// tau-symbol of Op_BJ(a):
///   sum_alpha (i hbar)^|alpha| (tau^(|alpha|+1) - (tau-1)^(|alpha|+1)) / (alpha! (|alpha|+1)) d_x^alpha d_p^alpha a.
SymbolPoly bj_to_tau(const SymbolPoly& a, const Rational& tau, Truncation truncation = {});
TauSymbolPoly bj_to_tau(const SymbolPoly& a, FormalTau, Truncation truncation = {});

/// Re-expresses a tau'-symbol as a tau-symbol of the same operator:
///   a_tau = sum_alpha (i hbar (tau - tau'))^|alpha| / alpha! d_x^alpha d_p^alpha a_tau'.
SymbolPoly tau_shift(const SymbolPoly& a, const Rational& from_tau, const Rational& to_tau,
                     Truncation truncation = {});

enum class MonomialDirection { weyl_of_bj, bj_of_weyl };

/// One-dimensional closed forms on x^r p^s.
SymbolPoly monomial_closed_form(MonomialDirection direction, unsigned r, unsigned s);

}  // namespace bjcalc
