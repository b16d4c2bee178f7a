#include "bjcalc/json_io.hpp"
#include "bjcalc/numeric.hpp"
#include "bjcalc/random_poly.hpp"
#include "bjcalc/symlang.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace bjcalc;
using nlohmann::json;

TEST_CASE("symbol payload layout") {
  const json j = to_json(parse_symbol("x^2*p^2 + (1/6)*hbar^2 - 2*i*x"));
  CHECK(j["kind"] == "symbol");
  CHECK(j["dimension"] == 1);
  CHECK(j["terms"].size() == 3);
  const json& first = j["terms"][0];
  CHECK(first["x"] == json::array({2}));
  CHECK(first["p"] == json::array({2}));
  CHECK(first["coeff"]["re"] == "1");
  CHECK(first["coeff"]["im"] == "0");
  CHECK(first["coeff"]["hbar_pow"] == 0);
}

TEST_CASE("exact payload round trips") {
  std::mt19937_64 rng(21);
  for (unsigned n = 1; n <= 3; ++n) {
    RandomPolyOptions options;
    options.dimension = n;
    for (int trial = 0; trial < 50; ++trial) {
      const SymbolPoly a = random_symbol(rng, options);
      CHECK(symbol_from_json(json::parse(to_json(a).dump())) == a);
      const OpPoly op = quantize_symbol(Weyl{}, a);
      const json payload = to_json(op);
      CHECK(payload["kind"] == "oppoly");
      CHECK(op_from_json(payload) == op);
    }
  }
}

TEST_CASE("formal tau payloads carry the tau power") {
  const json j = to_json(quantize_symbol(FormalTau{}, parse_symbol("x*p")));
  bool saw_tau = false;
  for (const json& term : j["terms"]) saw_tau = saw_tau || term.value("tau_pow", 0) > 0;
  CHECK(saw_tau);
}

TEST_CASE("malformed exact payloads are rejected") {
  json j = to_json(parse_symbol("x*p"));
  json wrong_kind = j;
  wrong_kind["kind"] = "grid";
  CHECK_THROWS_AS(symbol_from_json(wrong_kind), Error);
  json bad_rational = j;
  bad_rational["terms"][0]["coeff"]["re"] = "1/0";
  CHECK_THROWS_AS(symbol_from_json(bad_rational), Error);
  json bad_length = j;
  bad_length["terms"][0]["x"] = json::array({1, 2});
  CHECK_THROWS_AS(symbol_from_json(bad_length), Error);
  CHECK_THROWS_AS(symbol_from_json(json::parse("{}")), Error);
  CHECK_THROWS_AS(symbol_from_json(json::parse("[1, 2]")), Error);
}

TEST_CASE("grid payload and CSV round trips") {
  const numeric::UniformGrid<double> grid(64, 12.0);
  const auto psi = numeric::hermite_state(grid, 1.0, 2);
  const auto back = wavefunction_from_json(json::parse(to_json(psi).dump()));
  CHECK(back.grid == grid);
  CHECK(back.hbar == 1.0);
  CHECK((back.values - psi.values).norm() == 0.0);

  std::stringstream csv;
  write_csv(csv, psi);
  const auto from_csv = read_csv(csv, 1.0);
  CHECK(from_csv.grid == grid);
  CHECK((from_csv.values - psi.values).norm() <= 1e-14 * psi.values.norm());
}

TEST_CASE("malformed grid inputs are rejected") {
  std::stringstream too_short("0,1,0\n1,1,0\n");
  CHECK_THROWS_AS(read_csv(too_short, 1.0), Error);
  std::stringstream garbage("x,re,im\nfoo,bar,baz\n");
  CHECK_THROWS_AS(read_csv(garbage, 1.0), Error);
  std::stringstream uneven;
  for (int k = 0; k < 16; ++k) uneven << (k * k) << ",1,0\n";
  CHECK_THROWS_AS(read_csv(uneven, 1.0), Error);
  json j = to_json(numeric::gaussian_state(numeric::UniformGrid<double>(16, 4.0), 1.0));
  j["values"].erase(0);
  CHECK_THROWS_AS(wavefunction_from_json(j), Error);
}

TEST_CASE("coefficient table payload") {
  const json j = table_to_json({{0, Rational(1), Rational(1)}, {2, Rational(1, 6), Rational(-1, 3)}});
  CHECK(j["kind"] == "table");
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][1]["c"] == "-1/3");
}
