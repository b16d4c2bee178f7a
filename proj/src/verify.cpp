#include "bjcalc/verify.hpp"

#include "bjcalc/numeric.hpp"
#include "bjcalc/random_poly.hpp"
#include "bjcalc/symbol_transform.hpp"
#include "bjcalc/symlang.hpp"

#include <random>
#include <sstream>

namespace bjcalc {
namespace {

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : options_(options), rng_(options.seed) {}

  std::vector<CheckResult> run() {
    monomial_rules();
    weyl_of_bj();
    reciprocity();
    coefficients();
    closed_forms();
    tau_calculus();
    amplitude_route();
    numeric_harmonic();
    return std::move(results_);
  }

 private:
  void record(std::string formula, bool passed, std::string detail) {
    results_.push_back({std::move(formula), passed, std::move(detail)});
  }

  std::vector<SymbolPoly> random_symbols(unsigned n, unsigned count) {
    RandomPolyOptions opts;
    opts.dimension = n;
    opts.max_degree = options_.max_degree;
    opts.max_terms = 4;
    std::vector<SymbolPoly> out;
    for (unsigned k = 0; k < count; ++k) out.push_back(random_symbol(rng_, opts));
    return out;
  }

  std::vector<SymbolPoly> test_symbols() {
    std::vector<SymbolPoly> out;
    const unsigned d = options_.max_degree;
    for (unsigned r = 0; r <= d; ++r)
      for (unsigned s = 0; r + s <= d; ++s) out.push_back(SymbolPoly::monomial(1, {r, s}));
    for (SymbolPoly& a : random_symbols(1, options_.random_cases)) out.push_back(std::move(a));
    for (SymbolPoly& a : random_symbols(2, options_.random_cases / 4 + 1)) out.push_back(std::move(a));
    return out;
  }

  void monomial_rules() {
    std::string bad_average, bad_weyl;
    const unsigned d = options_.max_degree;
    for (unsigned r = 0; r <= d; ++r)
      for (unsigned s = 0; s <= d; ++s) {
        const std::string where = "x^" + std::to_string(r) + "*p^" + std::to_string(s);
        if (!(quantize_monomial(BornJordan{}, r, s) == tau_average(quantize_monomial(FormalTau{}, r, s))))
          bad_average = where;
        if (!(quantize_monomial(Tau{Rational(1, 2)}, r, s) == quantize_monomial(Weyl{}, r, s))) bad_weyl = where;
      }
    const std::string range = "r, s <= " + std::to_string(d);
    record("Born-Jordan monomial rule = tau-rule averaged over [0,1]", bad_average.empty(),
           bad_average.empty() ? range : "mismatch at " + bad_average);
    record("tau-rule at tau = 1/2 = Weyl monomial rule", bad_weyl.empty(),
           bad_weyl.empty() ? range : "mismatch at " + bad_weyl);
  }

  void weyl_of_bj() {
    const std::vector<SymbolPoly> symbols = test_symbols();
    for (const SymbolPoly& a : symbols)
      if (!(quantize_symbol(Weyl{}, bj_to_weyl(a)) == quantize_symbol(BornJordan{}, a))) {
        record("Op_W(BJ-to-Weyl symbol of a) = Op_BJ(a)", false, "fails on " + format_symbol(a));
        return;
      }
    record("Op_W(BJ-to-Weyl symbol of a) = Op_BJ(a)", true, std::to_string(symbols.size()) + " symbols");
  }

  void reciprocity() {
    const std::vector<SymbolPoly> symbols = test_symbols();
    for (const SymbolPoly& a : symbols)
      if (!(weyl_to_bj(bj_to_weyl(a)) == a) || !(bj_to_weyl(weyl_to_bj(a)) == a)) {
        record("Weyl-to-BJ and BJ-to-Weyl are mutually inverse", false, "fails on " + format_symbol(a));
        return;
      }
    record("Weyl-to-BJ and BJ-to-Weyl are mutually inverse", true, std::to_string(symbols.size()) + " symbols");
  }

  void coefficients() {
    constexpr unsigned kMax = 12;
    bool closed = true;
    for (unsigned k = 0; k <= kMax; k += 2)
      closed = closed && c_coefficient(MultiIndex({k})) == Rational(BigInt(2) - (BigInt(1) << k)) * bernoulli(k) &&
               c_coefficient(k) == c_coefficient(MultiIndex({k}));
    // sum_j c_2j/(2j)! u^2j times sinh(u)/u = sum_j u^2j/(2j+1)! is 1 as a power series.
    bool inverse = true;
    for (unsigned order = 0; order <= kMax; order += 2) {
      Rational coefficient = 0;
      for (unsigned j = 0; j <= order; j += 2)
        coefficient += c_coefficient(j) / Rational(factorial(j)) / Rational(factorial(order - j + 1));
      inverse = inverse && coefficient == (order == 0 ? 1 : 0);
    }
    record("c_k = (2 - 2^k) B_k for even k <= 12", closed, "");
    record("the c_k series is the reciprocal of sinh(u)/u", inverse, "through u^12");
  }

  void closed_forms() {
    const unsigned d = options_.max_degree;
    for (unsigned r = 0; r <= d; ++r)
      for (unsigned s = 0; s <= d; ++s) {
        const SymbolPoly a = SymbolPoly::monomial(1, {r, s});
        if (!(monomial_closed_form(MonomialDirection::weyl_of_bj, r, s) == bj_to_weyl(a)) ||
            !(monomial_closed_form(MonomialDirection::bj_of_weyl, r, s) == weyl_to_bj(a))) {
          record("closed monomial forms = derivative expansions", false,
                 "mismatch at x^" + std::to_string(r) + "*p^" + std::to_string(s));
          return;
        }
      }
    record("closed monomial forms = derivative expansions", true, "r, s <= " + std::to_string(d));
  }

  static const std::vector<Rational>& taus() {
    static const std::vector<Rational> values{Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1)};
    return values;
  }

  void tau_calculus() {
    const std::vector<SymbolPoly> symbols = random_symbols(1, options_.random_cases);
    std::string bj_fail, shift_fail;
    for (const SymbolPoly& a : symbols) {
      const OpPoly bj = quantize_symbol(BornJordan{}, a);
      for (const Rational& tau : taus()) {
        if (!(quantize_symbol(Tau{tau}, bj_to_tau(a, tau)) == bj)) bj_fail = format_symbol(a) + " at tau = " + to_string(tau);
        for (const Rational& target : taus())
          if (!(quantize_symbol(Tau{target}, tau_shift(a, tau, target)) == quantize_symbol(Tau{tau}, a)))
            shift_fail = format_symbol(a) + " from " + to_string(tau) + " to " + to_string(target);
      }
    }
    record("Op_tau(BJ-to-tau symbol of a) = Op_BJ(a)", bj_fail.empty(), bj_fail.empty() ? "tau in {0, 1/4, 1/3, 1/2, 1}" : "fails on " + bj_fail);
    record("tau-shift preserves the operator", shift_fail.empty(), shift_fail.empty() ? "all tau pairs" : "fails on " + shift_fail);
  }

  void amplitude_route() {
    for (const SymbolPoly& a : random_symbols(1, options_.random_cases)) {
      const AmplitudePoly b = amplitude_average(a);
      for (const Rational& tau : taus())
        if (!(amplitude_to_tau_symbol(b, tau) == bj_to_tau(a, tau))) {
          record("averaged amplitude expanded at tau = BJ-to-tau symbol", false,
                 "fails on " + format_symbol(a) + " at tau = " + to_string(tau));
          return;
        }
    }
    record("averaged amplitude expanded at tau = BJ-to-tau symbol", true, "");
  }

  void numeric_harmonic() {
    using namespace numeric;
    const std::string name = "harmonic oscillator ground state under weyl, tau(0.3), bj_quadrature, bj_sinc";
    try {
      const UniformGrid<double> grid(options_.grid_size, options_.box_length);
      NumericParams<double> params;
      params.hbar = options_.hbar;
      const SampledWavefunction<double> psi = gaussian_state(grid, options_.hbar);
      const SymbolPoly harmonic = parse_symbol("(1/2)*x^2 + (1/2)*p^2");
      const CVector<double> expected = psi.values * (options_.hbar / 2);
      double worst = 0;
      for (const NumericScheme<double>& scheme :
           {NumericScheme<double>{WeylScheme{}}, NumericScheme<double>{TauScheme<double>{0.3}},
            NumericScheme<double>{BjQuadrature{options_.quadrature_order}}, NumericScheme<double>{BjSinc{}}})
        worst = std::max(worst, relative_l2_error<double>(apply_operator(harmonic, psi, scheme, params).values, expected));
      std::ostringstream detail;
      detail << "max relative L2 error " << worst;
      record(name, worst <= options_.tolerance, detail.str());
    } catch (const Error& e) {
      record(name, false, e.what());
    }
  }

  VerifyOptions options_;
  std::mt19937_64 rng_;
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) { return Suite(options).run(); }

}  // namespace bjcalc
