// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include "bjcalc/numeric.hpp"
#include "bjcalc/random_poly.hpp"
#include "bjcalc/symbol_transform.hpp"
#include "bjcalc/symlang.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace bjcalc;
using namespace bjcalc::numeric;

namespace {

using Grid = UniformGrid<double>;
using State = SampledWavefunction<double>;
using Symbol = SampledSymbol<double>;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& what) {
    if (passed) detail = what;
    passed = false;
  }
};

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> body;
};

SymbolPoly monomial(unsigned r, unsigned s) {
  SymbolPoly out(1);
  out.add_term({r, s}, ExactScalar(1));
  return out;
}

RandomPolyOptions random_options(unsigned n, unsigned degree) {
  RandomPolyOptions o;
  o.dimension = n;
  o.max_degree = degree;
  return o;
}

std::string sci(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2e", v);
  return buffer;
}

Outcome monomial_rules() {
  Outcome out;
  for (unsigned r = 0; r <= 6; ++r)
    for (unsigned s = 0; s <= 6; ++s) {
      if (!(quantize_monomial(BornJordan{}, r, s) == tau_average(quantize_monomial(FormalTau{}, r, s))))
        out.fail("BJ vs tau average at r=" + std::to_string(r) + ", s=" + std::to_string(s));
      if (!(quantize_monomial(Tau{Rational(1, 2)}, r, s) == quantize_monomial(Weyl{}, r, s)))
        out.fail("tau=1/2 vs Weyl at r=" + std::to_string(r) + ", s=" + std::to_string(s));
    }
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  auto check = [&](const SymbolPoly& a) {
    if (!(quantize_symbol(Weyl{}, bj_to_weyl(a)) == quantize_symbol(BornJordan{}, a))) out.fail(format_symbol(a));
  };
  for (unsigned r = 0; r <= 6; ++r)
    for (unsigned s = 0; s <= 6; ++s) check(monomial(r, s));
  std::mt19937_64 rng(101);
  for (int k = 0; k < 100; ++k) check(random_symbol(rng, random_options(1, 6)));
  for (int k = 0; k < 20; ++k) check(random_symbol(rng, random_options(2, 6)));
  // The exact BJ quantization itself against the ordering oracle on test functions.
  for (int k = 0; k < 10; ++k) {
    const SymbolPoly a = random_symbol(rng, random_options(1, 5));
    const OpPoly op = quantize_symbol(BornJordan{}, a);
    for (const auto& f : oracle::test_functions(1, 3))
      if (!(oracle::apply(op, f) == oracle::apply_symbol(a, f, nullptr))) out.fail("ordering oracle: " + format_symbol(a));
  }
  return out;
}

Outcome reciprocity() {
  Outcome out;
  std::mt19937_64 rng(102);
  for (int k = 0; k < 100; ++k) {
    const SymbolPoly a = random_symbol(rng, random_options(1, 8));
    if (!(weyl_to_bj(bj_to_weyl(a)) == a)) out.fail("weyl_to_bj(bj_to_weyl(a)) for " + format_symbol(a));
    if (!(bj_to_weyl(weyl_to_bj(a)) == a)) out.fail("bj_to_weyl(weyl_to_bj(a)) for " + format_symbol(a));
  }
  for (unsigned k = 0; k <= 12; k += 2) {
    const Rational expected = (Rational(2) - Rational(BigInt(1) << k)) * bernoulli(k);
    if (c_coefficient(MultiIndex({k})) != expected) out.fail("c_" + std::to_string(k) + " vs (2 - 2^k) B_k");
    // independent series reciprocal of sinh(x)/x
    const auto series = oracle::reciprocal_sinhc(12);
    Rational factorial(1);
    for (unsigned j = 2; j <= k; ++j) factorial *= j;
    if (series[k] * factorial != expected) out.fail("c_" + std::to_string(k) + " vs x/sinh x series");
  }
  const Rational table[] = {Rational(1), Rational(-1, 3), Rational(7, 15), Rational(-31, 21), Rational(127, 15)};
  for (unsigned j = 0; j < 5; ++j)
    if (c_coefficient(2 * j) != table[j]) out.fail("published c_" + std::to_string(2 * j));
  return out;
}

Outcome closed_forms() {
  Outcome out;
  for (unsigned r = 0; r <= 6; ++r)
    for (unsigned s = 0; s <= 6; ++s) {
      if (!(monomial_closed_form(MonomialDirection::weyl_of_bj, r, s) == bj_to_weyl(monomial(r, s))))
        out.fail("weyl_of_bj closed form at r=" + std::to_string(r) + ", s=" + std::to_string(s));
      if (!(monomial_closed_form(MonomialDirection::bj_of_weyl, r, s) == weyl_to_bj(monomial(r, s))))
        out.fail("bj_of_weyl closed form at r=" + std::to_string(r) + ", s=" + std::to_string(s));
    }
  if (!(bj_to_weyl(monomial(2, 2)) == parse_symbol("x^2*p^2 - (1/6)*hbar^2"))) out.fail("x^2 p^2 to Weyl");
  if (!(weyl_to_bj(monomial(2, 2)) == parse_symbol("x^2*p^2 + (1/6)*hbar^2"))) out.fail("x^2 p^2 to BJ");
  return out;
}

Outcome tau_coherence() {
  Outcome out;
  const Rational taus[] = {Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1)};
  std::mt19937_64 rng(105);
  for (int k = 0; k < 20; ++k) {
    const SymbolPoly a = random_symbol(rng, random_options(1, 6));
    const OpPoly bj = quantize_symbol(BornJordan{}, a);
    const AmplitudePoly b = amplitude_average(a);
    for (const Rational& tau : taus) {
      if (!(quantize_symbol(Tau{tau}, bj_to_tau(a, tau)) == bj)) out.fail("bj_to_tau at tau=" + to_string(tau));
      for (const Rational& target : taus)
        if (!(quantize_symbol(Tau{target}, tau_shift(a, tau, target)) == quantize_symbol(Tau{tau}, a)))
          out.fail("tau_shift " + to_string(tau) + " -> " + to_string(target));
      if (!(amplitude_to_tau_symbol(b, tau) == bj_to_tau(a, tau))) out.fail("amplitude route at tau=" + to_string(tau));
    }
  }
  return out;
}

Outcome numeric_harmonic() {
  Outcome out;
  const Grid grid(512, 20.0);
  NumericParams<double> params;
  const State psi = gaussian_state(grid, 1.0);
  const SymbolPoly h = parse_symbol("(1/2)*x^2 + (1/2)*p^2");
  const NumericScheme<double> schemes[] = {WeylScheme{}, TauScheme<double>{0.3}, BjQuadrature{16}, BjSinc{}};
  std::vector<CVector<double>> results;
  double worst = 0;
  for (const auto& scheme : schemes) {
    results.push_back(apply_operator(h, psi, scheme, params).values);
    worst = std::max(worst, relative_l2_error<double>(results.back(), 0.5 * psi.values));
  }
  for (std::size_t a = 0; a < results.size(); ++a)
    for (std::size_t b = a + 1; b < results.size(); ++b)
      worst = std::max(worst, relative_l2_error<double>(results[a], results[b]));
  if (worst > 1e-8) out.fail("max error " + sci(worst));
  if (out.passed) out.detail = "max error " + sci(worst);
  return out;
}

Outcome numeric_routes() {
  Outcome out;
  const Grid grid(512, 20.0);
  NumericParams<double> params;
  double worst = 0;
  for (int k : {0, 1}) {
    const State psi = hermite_state(grid, 1.0, k);
    for (const char* text : {"x^2*p^2", "x^3*p"}) {
      const SymbolPoly a = parse_symbol(text);
      const auto q = apply_operator(a, psi, BjQuadrature{16}, params).values;
      const auto s = apply_operator(a, psi, BjSinc{}, params).values;
      worst = std::max(worst, relative_l2_error<double>(s, q));
    }
  }
  if (worst > 1e-6) out.fail("max difference " + sci(worst));
  if (out.passed) out.detail = "max difference " + sci(worst);
  return out;
}

Outcome null_symbol_exhibit() {
  Outcome out;
  const Grid grid(512, 20.0);
  NumericParams<double> params;
  const State psi = gaussian_state(grid, 1.0);
  const PhasePoint<double> z0 = default_null_center(grid, 1.0);
  const auto null = null_symbol(grid, 1.0, z0);
  const double bj = apply_operator(null.symbol, psi, BjSinc{}, params).norm() / psi.norm();
  const double weyl = apply_operator(null.symbol, psi, WeylScheme{}, params).norm() / psi.norm();
  std::ostringstream detail;
  detail << "x0*p0/(2 pi hbar) = " << z0.x * z0.p / (2 * std::numbers::pi) << ", BJ ratio " << sci(bj)
         << ", Weyl ratio " << sci(weyl);
  if (bj > 1e-4 || weyl < 0.1) out.fail(detail.str());
  out.detail = detail.str();
  return out;
}

Outcome involution() {
  Outcome out;
  const Grid grid(256, 20.0);
  std::mt19937_64 rng(109);
  std::normal_distribution<double> normal;
  const int n = grid.size();
  double worst = 0;
  for (int trial = 0; trial < 10; ++trial) {
    // band-limited: a few random Fourier modes on each axis, synthesized by inverse FFT
    CMatrix<double> spectrum = CMatrix<double>::Zero(n, n);
    for (int a = -4; a <= 4; ++a)
      for (int b = -4; b <= 4; ++b) spectrum((a + n) % n, (b + n) % n) = {normal(rng), normal(rng)};
    CMatrix<double> values(n, n);
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        std::complex<double> acc = 0;
        for (int a = -4; a <= 4; ++a)
          for (int b = -4; b <= 4; ++b)
            acc += spectrum((a + n) % n, (b + n) % n) * std::polar(1.0, 2 * std::numbers::pi * (a * j + b * m) / n);
        values(j, m) = acc;
      }
    const Symbol a{grid, 1.0, values};
    worst = std::max(worst, (symplectic_ft(symplectic_ft(a)).values - values).norm() / values.norm());
  }
  if (worst > 1e-10) out.fail("max error " + sci(worst));
  if (out.passed) out.detail = "max error " + sci(worst);
  return out;
}

Outcome antiwick_probes() {
  Outcome out;
  const Grid grid(64, 20.0);
  const Symbol one = sample_symbol<double>([](double, double) { return 1.0; }, grid, 1.0);
  const State ground = hermite_state(grid, 1.0, 0);
  const CVector<double> dense = oracle::dense_antiwick<double>([](double, double) { return 1.0; }, ground.values, grid);
  const std::complex<double> c = ground.values.dot(dense) / ground.values.squaredNorm();
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int k = 0; k < 5; ++k) {
    const State psi = hermite_state(grid, 1.0, k);
    const CVector<double> image = antiwick_apply(one, psi).values;
    const std::complex<double> ratio = psi.values.dot(image) / psi.values.squaredNorm();
    if (relative_l2_error<double>(image, ratio * psi.values) > 1e-4) out.fail("not proportional at k=" + std::to_string(k));
    lo = std::min(lo, ratio.real());
    hi = std::max(hi, ratio.real());
  }
  const double spread = (hi - lo) / std::abs(c);
  if (spread > 1e-4) out.fail("spread " + sci(spread));
  if (std::abs(hi - c.real()) / std::abs(c) > 1e-4) out.fail("constant differs from dense oracle");
  std::mt19937_64 rng(110);
  std::uniform_real_distribution<double> unit(0, 1);
  double worst = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 20; ++trial) {
    CMatrix<double> values(grid.size(), grid.size());
    for (auto& v : values.reshaped()) v = unit(rng) * unit(rng);
    const Symbol a{grid, 1.0, values};
    const State psi = hermite_state(grid, 1.0, trial % 6);
    worst = std::min(worst, psi.values.dot(antiwick_apply(a, psi).values).real());
  }
  if (worst < -1e-10) out.fail("negative expectation " + sci(worst));
  std::ostringstream detail;
  detail << "c = " << c.real() << ", spread " << sci(spread) << ", min expectation " << sci(worst);
  if (out.passed) out.detail = detail.str();
  return out;
}

Outcome parser() {
  Outcome out;
  std::mt19937_64 rng(111);
  for (int k = 0; k < 1000; ++k) {
    const unsigned n = 1 + k % 3;
    const SymbolPoly a = random_symbol(rng, random_options(n, 8));
    if (!(parse_symbol(format_symbol(a), n) == a)) out.fail("round trip: " + format_symbol(a));
  }
  std::uniform_int_distribution<int> length(0, 32), byte(0, 255);
  const std::string alphabet = "xp0123456789ihbar+-*/^() ";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int k = 0; k < 100000; ++k) {
    std::string text;
    const int len = length(rng);
    for (int j = 0; j < len; ++j) text += (k % 2) ? alphabet[pick(rng)] : static_cast<char>(byte(rng));
    try {
      parse_symbol(text, 2);
    } catch (const ParseError& e) {
      if (e.position() > text.size()) out.fail("error position past the end of input");
    } catch (const std::exception& e) {
      out.fail(std::string("unexpected exception: ") + e.what());
    }
  }
  return out;
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"1 monomial rules: BJ = tau-average, tau(1/2) = Weyl, r,s <= 6", 5, monomial_rules},
      {"2 Op_W(bj_to_weyl(a)) = Op_BJ(a), monomials + 100 (n=1) + 20 (n=2) random", 30, oracle_equivalence},
      {"3 weyl_to_bj/bj_to_weyl reciprocity and c_k table", 10, reciprocity},
      {"4 closed monomial formulas, r,s <= 6", 1, closed_forms},
      {"5 tau-calculus coherence and amplitude route", 30, tau_coherence},
      {"6 numeric harmonic oscillator, four schemes", 10, numeric_harmonic},
      {"7 bj_quadrature(16) vs bj_sinc on x^2p^2, x^3p", 20, numeric_routes},
      {"8 Born-Jordan null symbol", 10, null_symbol_exhibit},
      {"9 symplectic Fourier transform involution, N=256", 5, involution},
      {"10 anti-Wick identity constant and positivity", 30, antiwick_probes},
      {"11 parser round trip (1e3) and fuzz (1e5)", 30, parser},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) outcome.fail("took " + std::to_string(seconds) + " s");
    if (!outcome.passed) ++failures;
    std::printf("%s  %-72s %7.2fs  %s\n", outcome.passed ? "PASS" : "FAIL", c.name, seconds, outcome.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
