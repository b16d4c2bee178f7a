#include "bjcalc/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bjcalc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

using bjcalc::cli::ExitCode;

TEST_CASE("quantize") {
  CHECK(invoke({"quantize", "--rule", "bj", "x*p"}).out == "xhat*phat - (1/2)*i*hbar\n");
  CHECK(invoke({"quantize", "--rule", "weyl", "x*p"}).out == "xhat*phat - (1/2)*i*hbar\n");
  CHECK(invoke({"quantize", "--rule", "tau", "--tau", "0", "x*p"}).out == "xhat*phat\n");
  const Result formal = invoke({"quantize", "--rule", "tau", "x*p"});
  CHECK(formal.code == ExitCode::kSuccess);
  CHECK(formal.out.find("tau") != std::string::npos);
  CHECK(invoke({"--dim", "2", "quantize", "--rule", "bj", "x1*p1*x2*p2"}).code == ExitCode::kSuccess);
}

TEST_CASE("convert") {
  CHECK(invoke({"convert", "--from", "weyl", "--to", "bj", "x^2*p^2"}).out == "x^2*p^2 + (1/6)*hbar^2\n");
  CHECK(invoke({"convert", "--from", "bj", "--to", "weyl", "x^2*p^2"}).out == "x^2*p^2 - (1/6)*hbar^2\n");
  CHECK(invoke({"convert", "--from", "bj", "--to", "bj", "x*p"}).out == "x*p\n");
  CHECK(invoke({"convert", "--from", "bj", "--to", "weyl", "--truncate", "0", "x^2*p^2"}).out == "x^2*p^2\n");
}

TEST_CASE("coefficient table") {
  const Result table = invoke({"coeffs", "--max", "8"});
  REQUIRE(table.code == ExitCode::kSuccess);
  for (const char* c : {"-1/3", "7/15", "-31/21", "127/15", "1/6", "-1/30", "1/42"})
    CHECK(table.out.find(c) != std::string::npos);
  const auto j = nlohmann::json::parse(invoke({"--output", "json", "coeffs", "--max", "8"}).out);
  CHECK(j["kind"] == "table");
  CHECK(j["rows"].size() == 5);
  CHECK(j["rows"][4]["c"] == "127/15");
}

TEST_CASE("json output") {
  const auto j = nlohmann::json::parse(invoke({"--output", "json", "quantize", "--rule", "bj", "x*p"}).out);
  CHECK(j["kind"] == "oppoly");
  CHECK(j["terms"].size() == 2);
}

TEST_CASE("apply") {
  const Result harmonic = invoke({"--grid", "128", "apply", "--symbol", "harmonic", "--scheme", "bj_sinc"});
  CHECK(harmonic.code == ExitCode::kSuccess);
  const Result csv = invoke({"--grid", "64", "--output", "csv", "apply", "--symbol", "monomial:1:1", "--state", "hermite:1"});
  CHECK(csv.code == ExitCode::kSuccess);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') >= 64);
  const auto j = nlohmann::json::parse(
      invoke({"--grid", "64", "--output", "json", "apply", "--symbol", "x^2", "--scheme", "tau:0.3"}).out);
  CHECK(j["kind"] == "grid");
  CHECK(j["N"] == 64);
}

TEST_CASE("verify") {
  const Result r = invoke({"verify", "--max-degree", "3"});
  CHECK(r.code == ExitCode::kSuccess);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == ExitCode::kUsage);
  CHECK(invoke({"frobnicate"}).code == ExitCode::kUsage);
  CHECK(invoke({"--grid", "100", "apply"}).code == ExitCode::kUsage);
  CHECK(invoke({"--hbar", "-1", "coeffs"}).code == ExitCode::kUsage);
  CHECK(invoke({"quantize", "--rule", "bogus", "x"}).code == ExitCode::kUsage);
  const Result parse = invoke({"quantize", "x^-1"});
  CHECK(parse.code == ExitCode::kUsage);
  CHECK(parse.err.find('^') != std::string::npos);
  CHECK(invoke({"quantize", "x1*p2"}).code == ExitCode::kUsage);
  CHECK(invoke({"apply", "--state", "csv:/nonexistent/file.csv"}).code != ExitCode::kSuccess);
  CHECK(invoke({"coeffs", "--max", "1000"}).code == ExitCode::kUsage);
  CHECK(invoke({"quantize", "x^40*p^40"}).code == ExitCode::kUsage);
  const Result capped = invoke({"convert", "--from", "weyl", "--to", "bj", "x^14*p^14"});
  CHECK(capped.code == ExitCode::kComputation);
  CHECK(capped.err.find("cap") != std::string::npos);
}

TEST_CASE("identical arguments give identical output") {
  const std::vector<std::string> args{"--output", "json", "convert", "--from", "weyl", "--to", "tau", "--to-tau", "1/3",
                                      "x^3*p^2 + i*x*p"};
  const Result a = invoke(args), b = invoke(args);
  CHECK(a.code == ExitCode::kSuccess);
  CHECK(a.out == b.out);
  const Result c = invoke({"--grid", "64", "apply", "--scheme", "bj_quadrature:8"});
  CHECK(c.out == invoke({"--grid", "64", "apply", "--scheme", "bj_quadrature:8"}).out);
}
