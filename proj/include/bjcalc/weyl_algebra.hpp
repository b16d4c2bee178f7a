#pragma once

#include "bjcalc/poly.hpp"

namespace bjcalc {

/// Noncommutative polynomial in xhat_j, phat_j in normal-ordered form: every
/// term is c * xhat^alpha phat^beta with all xhat factors to the left.
/// Canonical by construction, so equality is term-map equality.
class OpPoly {
 public:
  using Terms = SymbolPoly::Terms;

  explicit OpPoly(unsigned dimension = 1) : terms_(dimension) {}

  static OpPoly constant(unsigned dimension, const ExactScalar& c);
  static OpPoly xhat(unsigned dimension, unsigned j = 0);
  static OpPoly phat(unsigned dimension, unsigned j = 0);
  /// c * xhat^alpha phat^beta with exponents laid out as [alpha..., beta...].
  static OpPoly normal_monomial(unsigned dimension, Exponents e, const ExactScalar& c = ExactScalar(1));
  /// Reads the coefficients of a symbol as a normal-ordered operator
  /// (the tau = 0 quantization).
  static OpPoly from_normal_symbol(const SymbolPoly& a) { return OpPoly(a); }

  unsigned dimension() const { return terms_.dimension(); }
  const Terms& terms() const { return terms_.terms(); }
  bool is_zero() const { return terms_.is_zero(); }
  unsigned total_degree() const { return terms_.total_degree(); }
  /// The normal-ordered coefficients viewed as a commutative symbol.
  const SymbolPoly& normal_symbol() const { return terms_; }

  OpPoly& operator+=(const OpPoly& other) {
    terms_ += other.terms_;
    return *this;
  }
  OpPoly& operator-=(const OpPoly& other) {
    terms_ -= other.terms_;
    return *this;
  }

  friend OpPoly operator+(OpPoly a, const OpPoly& b) { return a += b; }
  friend OpPoly operator-(OpPoly a, const OpPoly& b) { return a -= b; }
  friend OpPoly operator-(const OpPoly& a) { return OpPoly(-a.terms_); }
  friend OpPoly operator*(const OpPoly& a, const ExactScalar& s) { return OpPoly(a.terms_ * s); }
  friend OpPoly operator*(const ExactScalar& s, const OpPoly& a) { return OpPoly(a.terms_ * s); }
  /// Normal-ordered operator product.
  friend OpPoly operator*(const OpPoly& a, const OpPoly& b);
  friend bool operator==(const OpPoly& a, const OpPoly& b) { return a.terms_ == b.terms_; }

 private:
  explicit OpPoly(SymbolPoly terms) : terms_(std::move(terms)) {}

  SymbolPoly terms_;
};

OpPoly multiply(const OpPoly& a, const OpPoly& b);
OpPoly commutator(const OpPoly& a, const OpPoly& b);
bool equals(const OpPoly& a, const OpPoly& b);

/// Formal adjoint: reverses factor order and conjugates coefficients.
OpPoly adjoint(const OpPoly& a);

/// Places a one-dimensional operator into dimension j of an n-dimensional
/// algebra.
OpPoly embed(const OpPoly& one_dimensional, unsigned dimension, unsigned j);

}  // namespace bjcalc
