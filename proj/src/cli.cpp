#include "bjcalc/cli.hpp"

#include "bjcalc/json_io.hpp"
#include "bjcalc/numeric.hpp"
#include "bjcalc/symbol_transform.hpp"
#include "bjcalc/symlang.hpp"
#include "bjcalc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace bjcalc::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  double hbar = 1;
  unsigned dim = 1;
  int grid = 512;
  double box = 20;
  int quadrature = 16;
  double tolerance = 1e-8;
  std::string output = "text";
  unsigned max_degree = 4;

  // quantize
  std::string rule = "weyl";
  std::string tau;
  // convert
  std::string from = "bj";
  std::string to = "weyl";
  std::string from_tau;
  std::string to_tau;
  int truncate = -1;
  // coeffs
  unsigned max_k = 8;
  // apply
  std::string symbol = "harmonic";
  std::string state = "gaussian";
  std::string scheme = "weyl";

  std::string expression;
};

void validate(const Config& c) {
  if (!(c.hbar > 0) || !std::isfinite(c.hbar)) throw UsageError("--hbar must be a positive number");
  if (c.dim == 0) throw UsageError("--dim must be positive");
  if (c.grid < 16 || (c.grid & (c.grid - 1)) != 0) throw UsageError("--grid must be a power of two >= 16");
  if (!(c.box > 0) || !std::isfinite(c.box)) throw UsageError("--box must be positive");
  if (c.quadrature < 2) throw UsageError("--quadrature must be at least 2");
  if (!(c.tolerance > 0)) throw UsageError("--tolerance must be positive");
}

bool is_formal(const std::string& text) { return text.empty() || text == "formal" || text == "tau"; }

Rational rational_argument(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(flag) + " expects a rational such as 1/3, got '" + text + "'");
  }
}

void require_text_or_json(const Config& c) {
  if (c.output == "csv") throw UsageError("csv output is only available for grid results (apply)");
}

template <class Value>
void emit_exact(const Config& c, std::ostream& out, const Value& value, const std::string& text) {
  if (c.output == "json")
    out << to_json(value).dump(2) << '\n';
  else
    out << text << '\n';
}

int quantize(const Config& c, std::ostream& out) {
  require_text_or_json(c);
  const SymbolPoly a = parse_symbol(c.expression, c.dim);
  if (c.rule == "tau" && is_formal(c.tau)) {
    const TauOpPoly op = quantize_symbol(FormalTau{}, a);
    emit_exact(c, out, op, format_tau_op(op));
    return kSuccess;
  }
  Scheme scheme = Weyl{};
  if (c.rule == "bj")
    scheme = BornJordan{};
  else if (c.rule == "tau")
    scheme = Tau{rational_argument(c.tau, "--tau")};
  const OpPoly op = quantize_symbol(scheme, a);
  emit_exact(c, out, op, format_op(op));
  return kSuccess;
}

int convert(const Config& c, std::ostream& out) {
  require_text_or_json(c);
  const SymbolPoly a = parse_symbol(c.expression, c.dim);
  const Truncation cut = c.truncate >= 0 ? Truncation(static_cast<unsigned>(c.truncate)) : Truncation{};
  if (c.to == "tau" && is_formal(c.to_tau)) {
    if (c.from != "bj") throw UsageError("a formal target tau is only supported from the bj calculus");
    const TauSymbolPoly result = bj_to_tau(a, FormalTau{}, cut);
    emit_exact(c, out, result, format_tau_symbol(result));
    return kSuccess;
  }
  if (c.from == "tau" && is_formal(c.from_tau)) throw UsageError("--from tau needs --from-tau with a rational value");
  // Weyl is the tau = 1/2 member of the family; everything else goes through it.
  const Rational half(1, 2);
  auto source_tau = [&] { return c.from == "weyl" ? half : rational_argument(c.from_tau, "--from-tau"); };
  const Rational target_tau = c.to == "weyl" ? half : c.to == "tau" ? rational_argument(c.to_tau, "--to-tau") : half;
  SymbolPoly result(c.dim);
  if (c.from == c.to && c.from != "tau") {
    result = a;
  } else if (c.from == "bj") {
    result = c.to == "weyl" ? bj_to_weyl(a, cut) : bj_to_tau(a, target_tau, cut);
  } else if (c.to == "bj") {
    const SymbolPoly weyl = c.from == "weyl" ? a : tau_shift(a, source_tau(), half, cut);
    result = weyl_to_bj(weyl, cut);
  } else {
    result = tau_shift(a, source_tau(), target_tau, cut);
  }
  emit_exact(c, out, result, format_symbol(result));
  return kSuccess;
}

int coeffs(const Config& c, std::ostream& out) {
  require_text_or_json(c);
  if (c.max_k > 200) throw UsageError("--max is limited to 200");
  std::vector<CoefficientRow> rows;
  for (unsigned k = 0; k <= c.max_k; k += 2) rows.push_back({k, bernoulli(k), c_coefficient(k)});
  if (c.output == "json") {
    out << table_to_json(rows).dump(2) << '\n';
    return kSuccess;
  }
  std::size_t width = 3;
  for (const CoefficientRow& row : rows) width = std::max(width, to_string(row.bernoulli).size());
  out << std::left << std::setw(4) << "k" << "  " << std::setw(static_cast<int>(width)) << "B_k" << "  c_k\n";
  for (const CoefficientRow& row : rows)
    out << std::setw(4) << row.k << "  " << std::setw(static_cast<int>(width)) << to_string(row.bernoulli) << "  "
        << to_string(row.c) << '\n';
  return kSuccess;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, sep)) parts.push_back(part);
  return parts;
}

double decimal(const std::string& text, const std::string& context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(context + ": expected a decimal number, got '" + text + "'");
  }
}

unsigned count(const std::string& text, const std::string& context) {
  const double v = decimal(text, context);
  if (v < 0 || v != std::floor(v) || v > 64) throw UsageError(context + ": expected an integer in 0..64");
  return static_cast<unsigned>(v);
}

numeric::SampledWavefunction<double> make_state(const Config& c, const numeric::UniformGrid<double>& grid) {
  const auto parts = split(c.state, ':');
  if (c.state == "gaussian") return numeric::gaussian_state(grid, c.hbar);
  if (parts.size() == 2 && parts[0] == "hermite") return numeric::hermite_state(grid, c.hbar, static_cast<int>(count(parts[1], "--state hermite:k")));
  if (parts.size() >= 2 && parts[0] == "csv") {
    const std::string path = c.state.substr(4);
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open state file '" + path + "'");
    numeric::SampledWavefunction<double> psi = read_csv(file, c.hbar);
    if (!(psi.grid == grid)) throw UsageError("state file grid differs from --grid/--box");
    return psi;
  }
  throw UsageError("unknown state '" + c.state + "' (gaussian, hermite:k, csv:PATH)");
}

numeric::NumericScheme<double> make_scheme(const Config& c) {
  const auto parts = split(c.scheme, ':');
  if (c.scheme == "weyl") return numeric::WeylScheme{};
  if (c.scheme == "bj_sinc") return numeric::BjSinc{};
  if (parts[0] == "bj_quadrature" && parts.size() <= 2)
    return numeric::BjQuadrature{parts.size() == 2 ? static_cast<int>(count(parts[1], "--scheme bj_quadrature:K")) : c.quadrature};
  if (parts.size() == 2 && parts[0] == "tau") return numeric::TauScheme<double>{decimal(parts[1], "--scheme tau:value")};
  throw UsageError("unknown scheme '" + c.scheme + "' (weyl, tau:VALUE, bj_quadrature[:K], bj_sinc)");
}

int apply(const Config& c, std::ostream& out, std::ostream& err) {
  const numeric::UniformGrid<double> grid(c.grid, c.box);
  numeric::NumericParams<double> params;
  params.hbar = c.hbar;
  params.quadrature_order = c.quadrature;
  params.tolerance = c.tolerance;
  params.diagnostics = [&err](std::string_view message) { err << "warning: " << message << '\n'; };
  const numeric::SampledWavefunction<double> psi = make_state(c, grid);
  const numeric::NumericScheme<double> scheme = make_scheme(c);
  if (auto* q = std::get_if<numeric::BjQuadrature>(&scheme); q && q->order < 2)
    throw UsageError("quadrature order must be at least 2");

  const auto parts = split(c.symbol, ':');
  numeric::SampledWavefunction<double> result = psi;
  if (parts.size() == 3 && parts[0] == "sinc-null") {
    const auto null = numeric::null_symbol(
        grid, c.hbar, {decimal(parts[1], "--symbol sinc-null:x0:p0"), decimal(parts[2], "--symbol sinc-null:x0:p0")});
    err << std::setprecision(12) << "note: null-symbol center snapped to (" << null.center.x << ", " << null.center.p
        << "), p0*x0/(2*pi*hbar) = " << null.center.x * null.center.p / (2 * std::numbers::pi * c.hbar) << '\n';
    result = numeric::apply_operator(null.symbol, psi, scheme, params);
  } else {
    SymbolPoly a(1);
    if (c.symbol == "harmonic")
      a = parse_symbol("(1/2)*x^2 + (1/2)*p^2");
    else if (parts.size() == 3 && parts[0] == "monomial")
      a = SymbolPoly::monomial(1, {count(parts[1], "--symbol monomial:r:s"), count(parts[2], "--symbol monomial:r:s")});
    else
      a = parse_symbol(c.symbol, 1);
    result = numeric::apply_operator(a, psi, scheme, params);
  }

  if (c.output == "csv") {
    write_csv(out, result);
  } else if (c.output == "json") {
    out << to_json(result).dump(2) << '\n';
  } else {
    const std::complex<double> expectation = grid.spacing() * psi.values.dot(result.values);
    out << std::setprecision(12);
    out << "scheme: " << c.scheme << "\nsymbol: " << c.symbol << "\nstate: " << c.state << '\n';
    out << "norm(psi) = " << psi.norm() << "\nnorm(A psi) = " << result.norm() << '\n';
    out << "<psi, A psi> = " << expectation.real() << (expectation.imag() < 0 ? " - " : " + ")
        << std::abs(expectation.imag()) << "*i\n";
  }
  return kSuccess;
}

int verify(const Config& c, std::ostream& out) {
  require_text_or_json(c);
  if (c.max_degree > 8) throw UsageError("--max-degree is limited to 8");
  VerifyOptions options;
  options.max_degree = c.max_degree;
  options.grid_size = c.grid;
  options.box_length = c.box;
  options.hbar = c.hbar;
  options.quadrature_order = c.quadrature;
  options.tolerance = c.tolerance;
  const std::vector<CheckResult> results = run_verification(options);
  bool all = true;
  nlohmann::json report = nlohmann::json::array();
  for (const CheckResult& r : results) {
    all = all && r.passed;
    if (c.output == "json")
      report.push_back({{"formula", r.formula}, {"passed", r.passed}, {"detail", r.detail}});
    else
      out << (r.passed ? "PASS  " : "FAIL  ") << r.formula << (r.detail.empty() ? "" : "  [" + r.detail + "]") << '\n';
  }
  if (c.output == "json") out << nlohmann::json{{"kind", "verification"}, {"passed", all}, {"checks", report}}.dump(2) << '\n';
  return all ? kSuccess : kVerificationFailed;
}

void report_parse_error(const ParseError& e, const std::string& text, std::ostream& err) {
  err << "error: parse error " << e.what() << '\n';
  if (text.size() <= 200) err << "  " << text << '\n' << "  " << std::string(std::min(e.position(), text.size()), ' ') << "^\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app("Exact and numeric Born-Jordan, Weyl and tau quantization calculus", "bjcalc");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--hbar", c.hbar, "hbar for the numeric layer (the exact layer keeps it formal)");
  app.add_option("--dim", c.dim, "number of spatial dimensions for exact symbols");
  app.add_option("--grid", c.grid, "grid points N (power of two)");
  app.add_option("--box", c.box, "box length L");
  app.add_option("--quadrature", c.quadrature, "Gauss-Legendre order K");
  app.add_option("--tolerance", c.tolerance, "numeric tolerance");
  app.add_option("--output", c.output, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

  CLI::App* q = app.add_subcommand("quantize", "quantize a polynomial symbol into a normal-ordered operator");
  q->add_option("--rule", c.rule, "weyl, bj or tau")->check(CLI::IsMember({"weyl", "bj", "tau"}));
  q->add_option("--tau", c.tau, "tau for --rule tau: a rational or 'formal' (default)");
  q->add_option("symbol", c.expression, "symbol expression")->required();

  CLI::App* cv = app.add_subcommand("convert", "convert a symbol between calculi");
  cv->add_option("--from", c.from, "bj, weyl or tau")->check(CLI::IsMember({"bj", "weyl", "tau"}));
  cv->add_option("--to", c.to, "bj, weyl or tau")->check(CLI::IsMember({"bj", "weyl", "tau"}));
  cv->add_option("--from-tau", c.from_tau, "source tau (rational)");
  cv->add_option("--to-tau", c.to_tau, "target tau (rational or 'formal')");
  cv->add_option("--truncate", c.truncate, "keep derivative orders |alpha| <= k")->check(CLI::NonNegativeNumber);
  cv->add_option("symbol", c.expression, "symbol expression")->required();

  CLI::App* co = app.add_subcommand("coeffs", "Bernoulli numbers and the Weyl-to-Born-Jordan coefficients c_k");
  co->add_option("--max", c.max_k, "largest k");

  CLI::App* ap = app.add_subcommand("apply", "apply a quantized symbol to a sampled state (n = 1)");
  ap->add_option("--symbol", c.symbol, "harmonic, monomial:r:s, sinc-null:x0:p0 or a polynomial expression");
  ap->add_option("--state", c.state, "gaussian, hermite:k or csv:PATH");
  ap->add_option("--scheme", c.scheme, "weyl, tau:VALUE, bj_quadrature[:K] or bj_sinc");

  CLI::App* ve = app.add_subcommand("verify", "run the oracle-equivalence suite");
  ve->add_option("--max-degree", c.max_degree, "largest monomial degree checked");

  std::vector<const char*> argv{"bjcalc"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kUsage;
  }

  try {
    validate(c);
    if (*q) return quantize(c, out);
    if (*cv) return convert(c, out);
    if (*co) return coeffs(c, out);
    if (*ap) return apply(c, out, err);
    return verify(c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    report_parse_error(e, *ap ? c.symbol : c.expression, err);
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kComputation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputation;
  }
}

}  // namespace bjcalc::cli
