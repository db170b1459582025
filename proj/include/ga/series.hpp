#pragma once

// Truncated-series references for exp and log, evaluated by Horner
// recurrences over the geometric product. These exist to cross-check the
// closed forms, not to be fast.

#include "ga/core.hpp"

namespace ga {

struct SeriesConfig {
  int terms = 30;
};

// Sum of x^n / n! for n = 0..terms.
Multivector exp_series(const Multivector& x, const SeriesConfig& cfg = {});

// Alternating series of (x-1)^n / n for n = 1..terms. Requires
// 0 < ||x-1|| < 1 (seminorm sqrt(|det|)); x = 1 returns zero directly.
// Note the bound is necessary, not sufficient, in the algebras with an
// indefinite form: the seminorm bounds only the geometric mean of the two
// eigenvalues of x-1.
Multivector log_series(const Multivector& x, const SeriesConfig& cfg = {});

}  // namespace ga
