#pragma once

#include "bjcalc/rational.hpp"

#include <map>

namespace bjcalc {

struct GaussianRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Element of Q(i)[hbar]: a finite sum of Gaussian rationals times powers of a
/// formal hbar. Zero coefficients are never stored, so equality is map equality.
class ExactScalar {
 public:
  using Terms = std::map<unsigned, GaussianRational>;

  ExactScalar() = default;
  ExactScalar(const Rational& value) { set(0, {value, 0}); }  // NOLINT(implicit)
  ExactScalar(long value) : ExactScalar(Rational(value)) {}   // NOLINT(implicit)
  ExactScalar(int value) : ExactScalar(Rational(value)) {}    // NOLINT(implicit)
  ExactScalar(const GaussianRational& value, unsigned hbar_power = 0) { set(hbar_power, value); }

  static ExactScalar i() { return ExactScalar(GaussianRational{0, 1}); }
  static ExactScalar hbar(unsigned power = 1) { return ExactScalar(GaussianRational{1, 0}, power); }
  /// (i*hbar)^k, the ubiquitous prefactor of derivative expansions.
  static ExactScalar i_hbar(unsigned power);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;
  unsigned max_hbar_power() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  ExactScalar conj() const;

  ExactScalar& operator+=(const ExactScalar& other);
  ExactScalar& operator-=(const ExactScalar& other);
  ExactScalar& operator*=(const ExactScalar& other) { return *this = *this * other; }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator-(const ExactScalar& a);
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.terms_ == b.terms_; }

 private:
  void set(unsigned power, const GaussianRational& value) {
    if (!value.is_zero()) terms_[power] = value;
  }
  void accumulate(unsigned power, const GaussianRational& value);

  Terms terms_;
};

}  // namespace bjcalc
