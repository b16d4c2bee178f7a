#pragma once

#include "bjcalc/exact_scalar.hpp"
#include "bjcalc/rational.hpp"

#include <map>
#include <utility>

namespace bjcalc {

/// Polynomial in one formal auxiliary variable (tau, or an integration
/// variable t) with coefficients in Base. Base may itself be an AuxPoly, which
/// gives a second independent auxiliary variable.
///
/// The zero element of Base is carried along so that an empty AuxPoly still
/// knows its dimension when collapsed.
template <class Base>
class AuxPoly {
 public:
  using Coefficients = std::map<unsigned, Base>;

  explicit AuxPoly(Base zero = Base()) : zero_(std::move(zero)) {}

  /// The constant polynomial c.
  static AuxPoly constant(const Base& c, const Base& zero) {
    AuxPoly out(zero);
    out.add(0, c);
    return out;
  }
  /// The auxiliary variable itself, times `one`.
  static AuxPoly variable(const Base& one, const Base& zero) {
    AuxPoly out(zero);
    out.add(1, one);
    return out;
  }

  const Coefficients& coefficients() const { return coeffs_; }
  const Base& zero() const { return zero_; }
  bool is_zero() const { return coeffs_.empty(); }
  unsigned degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  Base coefficient(unsigned k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? zero_ : it->second;
  }

  /// Base value, valid only when the auxiliary degree is zero.
  Base collapse() const {
    if (degree() != 0) throw std::logic_error("auxiliary variable still present");
    return coefficient(0);
  }

  void add(unsigned k, const Base& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
      coeffs_.emplace(k, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }

  AuxPoly& operator+=(const AuxPoly& other) {
    for (const auto& [k, c] : other.coeffs_) add(k, c);
    return *this;
  }
  AuxPoly& operator-=(const AuxPoly& other) {
    for (const auto& [k, c] : other.coeffs_) add(k, -c);
    return *this;
  }

  friend AuxPoly operator+(AuxPoly a, const AuxPoly& b) { return a += b; }
  friend AuxPoly operator-(AuxPoly a, const AuxPoly& b) { return a -= b; }
  friend AuxPoly operator-(const AuxPoly& a) {
    AuxPoly out(a.zero_);
    for (const auto& [k, c] : a.coeffs_) out.coeffs_.emplace(k, -c);
    return out;
  }
  friend AuxPoly operator*(const AuxPoly& a, const ExactScalar& s) {
    AuxPoly out(a.zero_);
    for (const auto& [k, c] : a.coeffs_) out.add(k, c * s);
    return out;
  }
  friend AuxPoly operator*(const ExactScalar& s, const AuxPoly& a) { return a * s; }
  /// Product in the auxiliary variable; uses Base's own product, so for an
  /// operator-valued Base the factor order is preserved.
  friend AuxPoly operator*(const AuxPoly& a, const AuxPoly& b) {
    AuxPoly out(a.zero_);
    for (const auto& [ka, ca] : a.coeffs_)
      for (const auto& [kb, cb] : b.coeffs_) out.add(ka + kb, ca * cb);
    return out;
  }
  friend bool operator==(const AuxPoly& a, const AuxPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  Base zero_;
  Coefficients coeffs_;
};

using AuxScalar = AuxPoly<ExactScalar>;

/// Multiplies every coefficient of `a` by a scalar polynomial in the same
/// auxiliary variable.
template <class Base>
AuxPoly<Base> scale(const AuxPoly<Base>& a, const AuxScalar& s) {
  AuxPoly<Base> out(a.zero());
  for (const auto& [ka, ca] : a.coefficients())
    for (const auto& [ks, cs] : s.coefficients()) out.add(ka + ks, ca * cs);
  return out;
}

/// Lifts a base value to an auxiliary polynomial of degree zero.
template <class Base>
AuxPoly<Base> lift(const Base& value, const Base& zero) {
  return AuxPoly<Base>::constant(value, zero);
}

/// Exact integral over the auxiliary variable on [0, 1]: t^k -> 1/(k+1).
template <class Base>
Base integrate_unit_interval(const AuxPoly<Base>& a) {
  Base out = a.zero();
  for (const auto& [k, c] : a.coefficients()) out = out + c * ExactScalar(Rational(1, k + 1));
  return out;
}

/// Substitutes a rational value for the auxiliary variable.
template <class Base>
Base evaluate(const AuxPoly<Base>& a, const Rational& value) {
  Base out = a.zero();
  for (const auto& [k, c] : a.coefficients()) out = out + c * ExactScalar(bjcalc::pow(value, k));
  return out;
}

/// The formal scalar variable (tau or t).
inline AuxScalar aux_variable() { return AuxScalar::variable(ExactScalar(1), ExactScalar()); }
inline AuxScalar aux_constant(const ExactScalar& c) { return AuxScalar::constant(c, ExactScalar()); }

/// Integer power of a scalar auxiliary polynomial.
inline AuxScalar pow(const AuxScalar& base, unsigned exponent) {
  AuxScalar result = aux_constant(ExactScalar(1));
  for (unsigned k = 0; k < exponent; ++k) result = result * base;
  return result;
}

}  // namespace bjcalc
