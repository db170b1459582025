#pragma once

// Micro-benchmark harness comparing the closed forms against truncated
// series on seeded inputs. Input streams and error columns are
// deterministic from (op, samples, terms, seed); wall-clock numbers are not.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ga/core.hpp"

namespace ga {

struct BenchRow {
  std::string impl;  // "closed" or "series"
  int terms;         // 0 for closed
  double ns_per_op;
  double max_abs_err;  // vs the closed form; 0 for the closed row
};

struct BenchResult {
  std::string op;
  std::string algebra;
  std::size_t samples = 0;
  std::size_t skipped = 0;  // inputs outside the series domain
  int terms = 0;
  std::vector<BenchRow> rows;
};

// op is one of exp, log, sqrt. log draws from the finite-logarithm
// sectors; the series row covers only inputs with 0 < ||x-1|| < 1 and the
// rest are reported as skipped.
BenchResult run_bench(const Signature& sig, std::string_view op,
                      std::size_t samples, int terms, std::uint64_t seed);

// Header "impl,terms,ns_per_op,max_abs_err" plus one line per row.
std::string to_csv(const BenchResult& r);

}  // namespace ga
