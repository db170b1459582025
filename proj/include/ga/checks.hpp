#pragma once

// Property suites shared by the CLI `check` command and the test binaries.
// Each suite verifies one bundle of algebraic identities on seeded random
// samples; thresholds default to the values the library promises.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ga/core.hpp"

namespace ga {

struct CheckOptions {
  Signature sig = cl20;
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
  double tol = 1e-10;
};

struct CheckReport {
  std::string suite;
  std::string algebra;
  bool passed = true;
  std::size_t samples = 0;  // property evaluations performed
  double max_residual = 0.0;
  std::vector<std::pair<std::string, std::size_t>> per_sector;
  std::vector<std::string> failures;  // first few counterexamples
};

const std::vector<std::string_view>& check_suite_names();

// Suites: roundtrip (exp(log x) = x, winding branches, free families,
// light-cone asymptotics), involution (exp vs the three involutions,
// conjugation norms), product (structural product formula, commuting
// exponents, inverse via -log, det multiplicativity), sqrt (roots square
// back, root counts, scalar families), series (closed forms vs truncated
// series). Throws domain_violation for an unknown suite name.
CheckReport run_check(std::string_view suite, const CheckOptions& opt);

}  // namespace ga
