#pragma once

#include "bjcalc/poly.hpp"

#include <random>

namespace bjcalc {

struct RandomPolyOptions {
  unsigned dimension = 1;
  unsigned max_degree = 6;
  unsigned max_terms = 6;
  unsigned max_hbar_power = 2;
  int coefficient_range = 5;
  bool complex_coefficients = true;
};

/// Random symbol with small rational (optionally Gaussian-rational) coefficients
/// and occasional hbar factors. Deterministic for a given generator state.
template <class Rng>
SymbolPoly random_symbol(Rng& rng, const RandomPolyOptions& options) {
  const unsigned n = options.dimension;
  std::uniform_int_distribution<unsigned> term_count(1, options.max_terms);
  std::uniform_int_distribution<unsigned> degree(0, options.max_degree);
  std::uniform_int_distribution<unsigned> slot(0, 2 * n - 1);
  std::uniform_int_distribution<int> numerator(-options.coefficient_range, options.coefficient_range);
  std::uniform_int_distribution<int> denominator(1, options.coefficient_range);
  std::uniform_int_distribution<unsigned> hbar_power(0, options.max_hbar_power);
  std::bernoulli_distribution imaginary(0.5);

  SymbolPoly out(n);
  const unsigned terms = term_count(rng);
  for (unsigned t = 0; t < terms; ++t) {
    Exponents e(2 * n, 0);
    const unsigned d = degree(rng);
    for (unsigned k = 0; k < d; ++k) ++e[slot(rng)];
    GaussianRational value{Rational(numerator(rng), denominator(rng)), 0};
    if (options.complex_coefficients && imaginary(rng)) value.im = Rational(numerator(rng), denominator(rng));
    out.add_term(std::move(e), ExactScalar(value, hbar_power(rng)));
  }
  return out;
}

}  // namespace bjcalc
