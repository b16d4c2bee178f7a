#include "bjcalc/json_io.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace bjcalc {
namespace {

using nlohmann::json;

template <class Terms>
void append_terms(json& out, const Terms& terms, unsigned n, unsigned tau_power) {
  for (const auto& [e, c] : terms) {
    for (const auto& [power, value] : c.terms()) {
      json term;
      term["x"] = std::vector<unsigned>(e.begin(), e.begin() + n);
      term["p"] = std::vector<unsigned>(e.begin() + n, e.end());
      if (tau_power) term["tau_pow"] = tau_power;
      term["coeff"] = {{"re", to_string(value.re)}, {"im", to_string(value.im)}, {"hbar_pow", power}};
      out.push_back(std::move(term));
    }
  }
}

json envelope(const char* kind, unsigned n) {
  return {{"kind", kind}, {"dimension", n}, {"terms", json::array()}};
}

Rational rational_field(const json& j, const char* name) {
  try {
    return parse_rational(j.at(name).get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("invalid rational in field '") + name + "': " + e.what());
  }
}

SymbolPoly terms_from_json(const json& j, const char* kind) {
  try {
    if (j.at("kind").get<std::string>() != kind) throw Error(std::string("expected a JSON payload of kind '") + kind + "'");
    const unsigned n = j.at("dimension").get<unsigned>();
    if (n == 0) throw DimensionError("dimension must be positive");
    SymbolPoly out(n);
    for (const json& term : j.at("terms")) {
      if (term.contains("tau_pow")) throw Error("tau-dependent payloads cannot be read back");
      const auto x = term.at("x").get<std::vector<unsigned>>();
      const auto p = term.at("p").get<std::vector<unsigned>>();
      if (x.size() != n || p.size() != n) throw DimensionError("exponent list length differs from the dimension");
      Exponents e(x);
      e.insert(e.end(), p.begin(), p.end());
      const json& coeff = term.at("coeff");
      const GaussianRational value{rational_field(coeff, "re"), rational_field(coeff, "im")};
      out.add_term(e, ExactScalar(value, coeff.at("hbar_pow").get<unsigned>()));
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed JSON payload: ") + e.what());
  }
}

}  // namespace

json to_json(const SymbolPoly& a) {
  json out = envelope("symbol", a.dimension());
  append_terms(out["terms"], a.terms(), a.dimension(), 0);
  return out;
}

json to_json(const OpPoly& a) {
  json out = envelope("oppoly", a.dimension());
  append_terms(out["terms"], a.terms(), a.dimension(), 0);
  return out;
}

json to_json(const TauSymbolPoly& a) {
  const unsigned n = a.zero().dimension();
  json out = envelope("symbol", n);
  for (const auto& [k, c] : a.coefficients()) append_terms(out["terms"], c.terms(), n, k);
  return out;
}

json to_json(const TauOpPoly& a) {
  const unsigned n = a.zero().dimension();
  json out = envelope("oppoly", n);
  for (const auto& [k, c] : a.coefficients()) append_terms(out["terms"], c.terms(), n, k);
  return out;
}

json to_json(const numeric::SampledWavefunction<double>& psi) {
  json values = json::array();
  for (const auto& v : psi.values) values.push_back({v.real(), v.imag()});
  return {{"kind", "grid"}, {"N", psi.grid.size()}, {"L", psi.grid.length()}, {"hbar", psi.hbar}, {"values", values}};
}

SymbolPoly symbol_from_json(const json& j) { return terms_from_json(j, "symbol"); }

OpPoly op_from_json(const json& j) { return OpPoly::from_normal_symbol(terms_from_json(j, "oppoly")); }

numeric::SampledWavefunction<double> wavefunction_from_json(const json& j) {
  try {
    const numeric::UniformGrid<double> grid(j.at("N").get<int>(), j.at("L").get<double>());
    const json& values = j.at("values");
    if (static_cast<int>(values.size()) != grid.size()) throw GridError("grid payload has the wrong number of values");
    numeric::CVector<double> v(grid.size());
    for (int k = 0; k < grid.size(); ++k) v[k] = {values[k].at(0).get<double>(), values[k].at(1).get<double>()};
    return {grid, j.at("hbar").get<double>(), v};
  } catch (const json::exception& e) {
    throw Error(std::string("malformed grid payload: ") + e.what());
  }
}

json table_to_json(const std::vector<CoefficientRow>& rows) {
  json out = {{"kind", "table"}, {"dimension", 1}, {"rows", json::array()}};
  for (const CoefficientRow& row : rows)
    out["rows"].push_back({{"k", row.k}, {"bernoulli", to_string(row.bernoulli)}, {"c", to_string(row.c)}});
  return out;
}

void write_csv(std::ostream& out, const numeric::SampledWavefunction<double>& psi) {
  std::ostringstream buffer;
  buffer << std::setprecision(17);
  for (int k = 0; k < psi.grid.size(); ++k)
    buffer << psi.grid.point(k) << ',' << psi.values[k].real() << ',' << psi.values[k].imag() << '\n';
  out << buffer.str();
}

numeric::SampledWavefunction<double> read_csv(std::istream& in, double hbar) {
  std::vector<double> xs;
  std::vector<std::complex<double>> values;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    double x = 0, re = 0, im = 0;
    char c1 = 0, c2 = 0;
    if (!(row >> x >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',')
      throw Error("CSV line " + std::to_string(line_number) + ": expected 'x,re,im'");
    xs.push_back(x);
    values.emplace_back(re, im);
  }
  const int n = static_cast<int>(xs.size());
  if (n < 2) throw GridError("CSV input needs at least two samples");
  const double dx = xs[1] - xs[0];
  const numeric::UniformGrid<double> grid(n, dx * n);
  for (int k = 0; k < n; ++k)
    if (std::abs(xs[k] - grid.point(k)) > 1e-9 * grid.length())
      throw GridError("CSV x column is not the centered grid x_k = (k - N/2) L/N");
  numeric::CVector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = values[k];
  return {grid, hbar, v};
}

}  // namespace bjcalc
