#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bjcalc {

struct CheckResult {
  std::string formula;  // the identity that was checked, in words
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  unsigned max_degree = 4;
  unsigned random_cases = 20;
  std::uint64_t seed = 0x5eed;
  int grid_size = 512;
  double box_length = 20;
  double hbar = 1;
  int quadrature_order = 16;
  double tolerance = 1e-8;
};

/// Exact oracle-equivalence checks plus a numeric scheme-coherence check.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace bjcalc
