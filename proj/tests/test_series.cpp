#include <cmath>

#include "doctest.h"
#include "ga/core.hpp"
#include "ga/functions.hpp"
#include "ga/series.hpp"

using namespace ga;

TEST_CASE("scalar series values match the standard library") {
  CHECK(exp_series(scalar_mv(cl20, 1.0), SeriesConfig{30}).a0 ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  CHECK(log_series(scalar_mv(cl20, 1.0), SeriesConfig{60}).a0 == 0.0);
  CHECK(log_series(scalar_mv(cl20, 1.5), SeriesConfig{200}).a0 ==
        doctest::Approx(std::log(1.5)).epsilon(1e-12));
}

TEST_CASE("truncated exponential sharpens as terms grow") {
  const Multivector x = mv(cl11, 0.4, 0.7, -0.5, 0.9);
  const Multivector full = exp(x);
  double prev = 1e9;
  // stop before the truncation tail sinks under the rounding floor
  for (int terms : {5, 10, 15}) {
    const double err = max_abs_diff(exp_series(x, SeriesConfig{terms}), full);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(max_abs_diff(exp_series(x, SeriesConfig{30}), full) <= 1e-12);
}

TEST_CASE("zero-term exponential is the empty product") {
  const Multivector one = exp_series(mv(cl20, 2, 1, -1, 3), SeriesConfig{0});
  CHECK(approx_eq(one, scalar_mv(cl20, 1.0), 0.0));
}

TEST_CASE("series exponential agrees with the closed form on a coarse grid") {
  for (const Signature& s : {cl02, cl11, cl20}) {
    for (double a0 = -1.0; a0 <= 1.0; a0 += 0.5)
      for (double a1 = -1.0; a1 <= 1.0; a1 += 0.5)
        for (double a12 = -1.0; a12 <= 1.0; a12 += 1.0) {
          const Multivector x = mv(s, a0, a1, -0.5, a12);
          CHECK(max_abs_diff(exp_series(x, SeriesConfig{30}), exp(x)) <= 1e-12);
        }
  }
  for (const Signature& s : {cl01, cl10})
    for (double a0 = -1.0; a0 <= 1.0; a0 += 0.25)
      for (double a1 = -1.0; a1 <= 1.0; a1 += 0.25) {
        const Multivector x = mv(s, a0, a1);
        CHECK(max_abs_diff(exp_series(x, SeriesConfig{30}), exp(x)) <= 1e-12);
      }
}

TEST_CASE("one-term log is the first Mercator step") {
  const Multivector x = mv(cl20, 1.2, 0.1, -0.05, 0.08);
  const Multivector first = log_series(x, SeriesConfig{1});
  CHECK(max_abs_diff(first, mv(cl20, 0.2, 0.1, -0.05, 0.08)) <= 1e-15);
}

TEST_CASE("series log agrees with the principal branch near one") {
  for (const Signature& s : {cl01, cl10, cl02, cl11, cl20}) {
    for (double d0 : {-0.12, 0.0, 0.15})
      for (double d1 : {-0.1, 0.07}) {
        const Multivector x =
            s.p + s.q == 1 ? mv(s, 1.0 + d0, d1)
                           : mv(s, 1.0 + d0, d1, 0.05, -0.5 * d1);
        const LogResult r = log(x);
        REQUIRE(r.principal.has_value());
        CHECK(max_abs_diff(log_series(x, SeriesConfig{60}), *r.principal) <=
              1e-10);
      }
  }
}

TEST_CASE("log series refuses arguments outside its convergence disk") {
  CHECK_THROWS_AS((void)log_series(scalar_mv(cl20, 3.0), SeriesConfig{60}),
                  error);
  try {
    (void)log_series(scalar_mv(cl20, 3.0), SeriesConfig{60});
  } catch (const error& e) {
    CHECK(e.code() == errc::out_of_convergence_domain);
  }
  // a nonzero null step has seminorm zero, which the 0 < ||x-1|| bound rejects
  CHECK_THROWS_AS(
      (void)log_series(mv(cl20, 1.0, 0.8, 0, 0.8), SeriesConfig{60}), error);
}

TEST_CASE("series reject nonsensical term counts") {
  CHECK_THROWS_AS((void)exp_series(scalar_mv(cl20, 1.0), SeriesConfig{-1}),
                  error);
  CHECK_THROWS_AS((void)log_series(scalar_mv(cl20, 1.2), SeriesConfig{0}),
                  error);
}
