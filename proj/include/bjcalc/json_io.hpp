#pragma once

#include "bjcalc/numeric/grid.hpp"
#include "bjcalc/quantizer.hpp"
#include "bjcalc/weyl_algebra.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace bjcalc {

// Exact payloads:
//   {"kind": "symbol"|"oppoly", "dimension": n,
//    "terms": [{"x": [..], "p": [..], "coeff": {"re": "a/b", "im": "c/d", "hbar_pow": k}}, ...]}
// One entry per (monomial, hbar power); tau-dependent results add "tau_pow".
// Grid payloads: {"kind": "grid", "N": .., "L": .., "hbar": .., "values": [[re, im], ...]}.

nlohmann::json to_json(const SymbolPoly& a);
nlohmann::json to_json(const OpPoly& a);
nlohmann::json to_json(const TauSymbolPoly& a);
nlohmann::json to_json(const TauOpPoly& a);
nlohmann::json to_json(const numeric::SampledWavefunction<double>& psi);

SymbolPoly symbol_from_json(const nlohmann::json& j);
OpPoly op_from_json(const nlohmann::json& j);
numeric::SampledWavefunction<double> wavefunction_from_json(const nlohmann::json& j);

struct CoefficientRow {
  unsigned k;
  Rational bernoulli;
  Rational c;
};
nlohmann::json table_to_json(const std::vector<CoefficientRow>& rows);

/// One row per sample: x, Re psi, Im psi.
void write_csv(std::ostream& out, const numeric::SampledWavefunction<double>& psi);
/// Grid size and box length are inferred from the x column, which must be the
/// centered grid x_k = (k - N/2) L/N.
numeric::SampledWavefunction<double> read_csv(std::istream& in, double hbar);

}  // namespace bjcalc
