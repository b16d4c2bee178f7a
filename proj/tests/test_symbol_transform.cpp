#include "bjcalc/quantizer.hpp"
#include "bjcalc/random_poly.hpp"
#include "bjcalc/symbol_transform.hpp"
#include "bjcalc/symlang.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace bjcalc;

namespace {

SymbolPoly sym(const char* text, unsigned n = 1) { return parse_symbol(text, n); }

std::vector<Rational> sample_taus() { return {Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1)}; }

}  // namespace

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("one-dimensional c_k") {
  CHECK(c_coefficient(0u) == 1);
  CHECK(c_coefficient(2u) == Rational(-1, 3));
  CHECK(c_coefficient(4u) == Rational(7, 15));
  CHECK(c_coefficient(6u) == Rational(-31, 21));
  CHECK(c_coefficient(8u) == Rational(127, 15));
  CHECK(c_coefficient(3u) == 0);
}

TEST_CASE("c_k matches direct inversion of sinh(u)/u") {
  const std::vector<Rational> g = oracle::reciprocal_sinhc(20);
  for (unsigned k = 0; k <= 20; ++k) CHECK(c_coefficient(k) == g[k] * oracle::factorial(k));
}

TEST_CASE("multi-index c_alpha") {
  CHECK(c_coefficient(MultiIndex({0})) == 1);
  CHECK(c_coefficient(MultiIndex({0, 0})) == 1);
  CHECK(c_coefficient(MultiIndex({2})) == Rational(-1, 3));
  CHECK(c_coefficient(MultiIndex({1, 1})) == Rational(-1, 3));
  CHECK(c_coefficient(MultiIndex({1})) == 0);
  for (unsigned k = 0; k <= 12; ++k) CHECK(c_coefficient(MultiIndex({k})) == c_coefficient(k));
  CHECK_THROWS_AS(c_coefficient(MultiIndex({14})), ResourceError);
  CHECK_THROWS_AS(c_coefficient(MultiIndex({7, 7})), ResourceError);
}

TEST_CASE("c_alpha matches multivariate series inversion with ordered compositions") {
  for (unsigned n = 1; n <= 3; ++n) {
    const unsigned order = n == 3 ? 6 : 10;
    for (const auto& [beta, g] : oracle::reciprocal_multi(n, order)) {
      Rational fact = 1;
      for (unsigned v : beta) fact *= oracle::factorial(v);
      REQUIRE(c_coefficient(MultiIndex(beta)) == g * fact);
    }
  }
  const CoeffTable table(2, 6);
  CHECK(table.at(MultiIndex({1, 1})) == Rational(-1, 3));
  CHECK(table.at(MultiIndex({3, 3})) == c_coefficient(MultiIndex({3, 3})));
}

TEST_CASE("bj_to_weyl examples") {
  CHECK(bj_to_weyl(sym("x^2*p^2")) == sym("x^2*p^2 - (1/6)*hbar^2"));
  CHECK(bj_to_weyl(sym("(1/2)*x^2 + (1/2)*p^2")) == sym("(1/2)*x^2 + (1/2)*p^2"));
  CHECK(bj_to_weyl(sym("x*p")) == sym("x*p"));
  CHECK(bj_to_weyl(sym("x^4*p^4"), 0u) == sym("x^4*p^4"));
}

TEST_CASE("weyl_to_bj examples") {
  CHECK(weyl_to_bj(sym("x^2*p^2")) == sym("x^2*p^2 + (1/6)*hbar^2"));
  CHECK(weyl_to_bj(sym("3/7 - i*hbar")) == sym("3/7 - i*hbar"));
}

TEST_CASE("bj_to_tau examples") {
  const TauSymbolPoly formal = bj_to_tau(sym("x*p"), FormalTau{});
  CHECK(format_tau_symbol(formal) == "x*p - (1/2)*i*hbar + i*hbar*tau");
  CHECK(bj_to_tau(sym("x^3*p^2 + x"), Rational(1, 2)) == bj_to_weyl(sym("x^3*p^2 + x")));
  CHECK(bj_to_tau(sym("p^5"), Rational(1, 3)) == sym("p^5"));
  for (const Rational& tau : sample_taus()) CHECK(evaluate(formal, tau) == bj_to_tau(sym("x*p"), tau));
}

TEST_CASE("tau_shift examples") {
  const SymbolPoly xp = sym("x*p");
  for (const Rational& tau : sample_taus()) {
    const SymbolPoly expected = xp + SymbolPoly::constant(1, ExactScalar::i() * ExactScalar::hbar() * ExactScalar(tau - Rational(1, 2)));
    CHECK(tau_shift(xp, Rational(1, 2), tau) == expected);
    CHECK(tau_shift(xp, Rational(1, 2), tau) == bj_to_tau(weyl_to_bj(xp), tau));
    CHECK(tau_shift(xp, tau, tau) == xp);
  }
}

TEST_CASE("monomial closed forms") {
  CHECK(monomial_closed_form(MonomialDirection::weyl_of_bj, 2, 2) == sym("x^2*p^2 - (1/6)*hbar^2"));
  CHECK(monomial_closed_form(MonomialDirection::weyl_of_bj, 1, 1) == sym("x*p"));
  CHECK(monomial_closed_form(MonomialDirection::bj_of_weyl, 2, 2) == sym("x^2*p^2 + (1/6)*hbar^2"));
  for (unsigned r = 0; r <= 8; ++r)
    for (unsigned s = 0; s <= 8; ++s) {
      const SymbolPoly a = SymbolPoly::monomial(1, {r, s});
      CHECK(monomial_closed_form(MonomialDirection::weyl_of_bj, r, s) == bj_to_weyl(a));
      CHECK(monomial_closed_form(MonomialDirection::bj_of_weyl, r, s) == weyl_to_bj(a));
    }
}

TEST_CASE("Op_W of the BJ-to-Weyl symbol is Op_BJ") {
  for (unsigned r = 0; r <= 6; ++r)
    for (unsigned s = 0; s <= 6; ++s) {
      const SymbolPoly a = SymbolPoly::monomial(1, {r, s});
      CHECK(quantize_symbol(Weyl{}, bj_to_weyl(a)) == quantize_symbol(BornJordan{}, a));
    }
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = 1 + trial % 3;
    const SymbolPoly a = random_symbol(rng, {n, n == 3 ? 4u : 6u, 4, 2, 5, true});
    CHECK(quantize_symbol(Weyl{}, bj_to_weyl(a)) == quantize_symbol(BornJordan{}, a));
  }
}

TEST_CASE("reciprocity on random symbols up to degree 8") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const SymbolPoly a = random_symbol(rng, {static_cast<unsigned>(1 + trial % 2), 8, 4, 2, 5, true});
    CHECK(weyl_to_bj(bj_to_weyl(a)) == a);
    CHECK(bj_to_weyl(weyl_to_bj(a)) == a);
  }
}

TEST_CASE("BJ-to-Weyl correction drops the degree by at least four") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const SymbolPoly a = random_symbol(rng, {static_cast<unsigned>(1 + trial % 2), 7, 4, 1, 5, true});
    const SymbolPoly correction = bj_to_weyl(a) - a;
    if (a.total_degree() <= 3) {
      CHECK(correction.is_zero());
    } else if (!correction.is_zero()) {
      CHECK(correction.total_degree() + 4 <= a.total_degree());
    }
  }
}

TEST_CASE("tau symbols quantize to the same operator") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 12; ++trial) {
    const SymbolPoly a = random_symbol(rng, {1, 6, 4, 1, 4, true});
    const OpPoly bj = quantize_symbol(BornJordan{}, a);
    for (const Rational& tau : sample_taus()) {
      CHECK(quantize_symbol(Tau{tau}, bj_to_tau(a, tau)) == bj);
      CHECK(amplitude_to_tau_symbol(amplitude_average(a), tau) == bj_to_tau(a, tau));
      for (const Rational& target : sample_taus()) {
        const SymbolPoly shifted = tau_shift(a, tau, target);
        CHECK(quantize_symbol(Tau{target}, shifted) == quantize_symbol(Tau{tau}, a));
        CHECK(tau_shift(shifted, target, tau) == a);
      }
    }
  }
}

TEST_CASE("formal-tau BJ symbol quantizes to a tau-free operator") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const SymbolPoly a = random_symbol(rng, {static_cast<unsigned>(1 + trial % 2), 5, 3, 1, 4, true});
    const TauOpPoly quantized = quantize_symbol(FormalTau{}, bj_to_tau(a, FormalTau{}));
    CHECK(quantized.degree() == 0);
    CHECK(quantized.collapse() == quantize_symbol(BornJordan{}, a));
  }
}

TEST_CASE("truncation keeps derivative orders up to the cut") {
  const SymbolPoly a = sym("x^4*p^4");
  const SymbolPoly full = bj_to_weyl(a);
  CHECK(bj_to_weyl(a, 2u) == sym("x^4*p^4 - 6*hbar^2*x^2*p^2"));
  CHECK(bj_to_weyl(a, 8u) == full);
}
