#pragma once

// CLI report type and its serializers. The JSON layout keeps a fixed key
// set and order so identical runs produce identical bytes:
//   {"command":str, "algebra":str, "input":str,
//    "result":{"kind":str, "coeffs":[..]|null, "family":str|null,
//              "axis":[..]|null, ...extensions},
//    "sector":{"tag":str,"qsq":num,"det":num}|null,
//    "residual":num|null, "timing":{..}|null}
// Extension keys (family_log, finite_part, divergent_direction, roots,
// families, notes, suites, bench) appear inside "result" only when the
// command produced them.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ga/bench.hpp"
#include "ga/checks.hpp"
#include "ga/core.hpp"
#include "ga/functions.hpp"

namespace ga {

struct CliReport {
  std::string command;
  std::string algebra;
  std::string input;

  std::string kind = "none";
  std::optional<std::array<double, 4>> coeffs;
  std::optional<std::string> family;
  std::optional<std::array<double, 4>> axis;

  std::optional<double> family_log;
  std::optional<std::array<double, 4>> finite_part;
  std::optional<std::array<double, 4>> divergent_direction;
  std::vector<std::array<double, 4>> roots;
  std::vector<std::string> families;
  std::vector<std::string> notes;
  std::vector<CheckReport> suites;
  std::optional<BenchResult> bench;

  std::optional<SectorClass> sector;
  std::optional<double> residual;
  std::vector<std::pair<std::string, double>> timing;  // ns-per-op entries
};

std::array<double, 4> coeff_array(const Multivector& x);

// Single line, no trailing newline. Doubles print with 17 significant
// digits so reports are byte-stable across runs with equal inputs.
std::string to_json(const CliReport& r);

// Human-readable block for terminal use.
std::string to_text(const CliReport& r);

}  // namespace ga
