#include "ga/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <utility>

#include "ga/functions.hpp"
#include "ga/sampling.hpp"
#include "ga/series.hpp"

namespace ga {

namespace {

// Defeats dead-code elimination without perturbing the measured kernel.
volatile double g_sink = 0.0;

void consume(const Multivector& m) {
  g_sink = g_sink + m.a0 + m.a1 + m.a2 + m.a12;
}

template <typename Fn>
double ns_per_call(const std::vector<Multivector>& inputs, Fn&& fn) {
  if (inputs.empty()) return 0.0;
  for (const Multivector& x : inputs) consume(fn(x));  // warmup
  const std::size_t reps = std::max<std::size_t>(1, 100000 / inputs.size());
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t r = 0; r < reps; ++r)
    for (const Multivector& x : inputs) consume(fn(x));
  const auto t1 = std::chrono::steady_clock::now();
  const double ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
  return ns / (static_cast<double>(reps) * static_cast<double>(inputs.size()));
}

bool finite_log_sector(SectorTag t) {
  switch (t) {
    case SectorTag::trig_sector:
    case SectorTag::hyperbolic_sector:
    case SectorTag::null_qvector:
    case SectorTag::positive_scalar_axis:
    case SectorTag::negative_scalar_axis:
      return true;
    default:
      return false;
  }
}

// Even indices draw near the identity so the Mercator domain is populated;
// odd indices rotate through the sectors for coverage.
std::vector<Multivector> log_inputs(const Signature& sig, std::size_t n,
                                    Rng& rng) {
  std::vector<SectorTag> finite;
  for (SectorTag t : reachable_sectors(sig))
    if (finite_log_sector(t)) finite.push_back(t);
  std::vector<Multivector> v;
  v.reserve(n);
  std::size_t rot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 2 == 0 || finite.empty()) {
      v.push_back(exp(random_mv(sig, rng, -0.3, 0.3)));
    } else {
      v.push_back(sample_sector(sig, finite[rot++ % finite.size()], rng));
    }
  }
  return v;
}

std::vector<Multivector> sqrt_inputs(const Signature& sig, std::size_t n,
                                     Rng& rng) {
  std::vector<Multivector> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Multivector r = i % 2 == 0 ? random_mv(sig, rng, -0.3, 0.3) + 1.0
                               : random_mv(sig, rng, -1.0, 1.0);
    v.push_back(gp(r, r));  // guarantees a real root exists
  }
  return v;
}

Multivector closed_log(const Multivector& x) {
  return log(x).principal.value();  // inputs are drawn from finite sectors
}

Multivector closed_sqrt(const Multivector& x) {
  const SqrtResult r = sqrt_all(x);
  return r.isolated.empty() ? scalar_mv(x.sig, 0.0) : r.isolated.front();
}

double nearest_root_diff(const SqrtResult& closed, const Multivector& approx) {
  double best = std::numeric_limits<double>::infinity();
  for (const Multivector& r : closed.isolated)
    best = std::min(best, max_abs_diff(r, approx));
  return best;
}

}  // namespace

BenchResult run_bench(const Signature& sig, std::string_view op,
                      std::size_t samples, int terms, std::uint64_t seed) {
  if (samples < 1)
    throw error(errc::domain_violation, "bench: samples must be >= 1");
  if (terms < 1)
    throw error(errc::domain_violation, "bench: terms must be >= 1");

  BenchResult out;
  out.op = std::string(op);
  out.algebra = std::string(to_string(sig.tag));
  out.samples = samples;
  out.terms = terms;

  Rng rng = substream(seed, 9000);
  std::vector<Multivector> inputs;
  if (op == "exp") {
    inputs.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i)
      inputs.push_back(random_mv(sig, rng, -1.0, 1.0));
  } else if (op == "log") {
    inputs = log_inputs(sig, samples, rng);
  } else if (op == "sqrt") {
    inputs = sqrt_inputs(sig, samples, rng);
  } else {
    throw error(errc::domain_violation, "bench: unknown op, expected exp|log|sqrt");
  }

  // Both rows see the same inputs; the series row drops the ones outside
  // the Mercator domain (log and the exp(log/2) square root need it).
  std::vector<Multivector> series_ok;
  if (op == "exp") {
    series_ok = inputs;
  } else {
    for (const Multivector& x : inputs) {
      try {
        (void)log_series(x, SeriesConfig{2});
        series_ok.push_back(x);
      } catch (const error&) {
      }
    }
  }
  out.skipped = inputs.size() - series_ok.size();

  BenchRow closed;
  closed.impl = "closed";
  closed.terms = 0;
  closed.max_abs_err = 0.0;
  BenchRow series;
  series.impl = "series";
  series.terms = terms;
  series.max_abs_err = 0.0;

  if (op == "exp") {
    closed.ns_per_op = ns_per_call(inputs, [](const Multivector& x) { return exp(x); });
    series.ns_per_op = ns_per_call(
        series_ok, [terms](const Multivector& x) { return exp_series(x, SeriesConfig{terms}); });
    for (const Multivector& x : series_ok)
      series.max_abs_err =
          std::max(series.max_abs_err, max_abs_diff(exp(x), exp_series(x, SeriesConfig{terms})));
  } else if (op == "log") {
    closed.ns_per_op = ns_per_call(inputs, closed_log);
    series.ns_per_op = ns_per_call(
        series_ok, [terms](const Multivector& x) { return log_series(x, SeriesConfig{terms}); });
    for (const Multivector& x : series_ok)
      series.max_abs_err = std::max(series.max_abs_err,
                                    max_abs_diff(closed_log(x), log_series(x, SeriesConfig{terms})));
  } else {
    closed.ns_per_op = ns_per_call(inputs, closed_sqrt);
    const auto series_sqrt = [terms](const Multivector& x) {
      return exp_series(0.5 * log_series(x, SeriesConfig{terms}), SeriesConfig{terms});
    };
    series.ns_per_op = ns_per_call(series_ok, series_sqrt);
    for (const Multivector& x : series_ok)
      series.max_abs_err =
          std::max(series.max_abs_err, nearest_root_diff(sqrt_all(x), series_sqrt(x)));
  }

  out.rows.push_back(std::move(closed));
  out.rows.push_back(std::move(series));
  return out;
}

std::string to_csv(const BenchResult& r) {
  std::string out = "impl,terms,ns_per_op,max_abs_err\n";
  char buf[160];
  for (const BenchRow& row : r.rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%.1f,%.17g\n", row.impl.c_str(),
                  row.terms, row.ns_per_op, row.max_abs_err);
    out += buf;
  }
  return out;
}

}  // namespace ga
