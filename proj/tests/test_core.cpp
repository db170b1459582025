#include <cmath>
#include <string>

#include "doctest.h"
#include "ga/core.hpp"

using namespace ga;

namespace {

const Signature kAll[] = {cl01, cl10, cl02, cl11, cl20};

Multivector e1_of(const Signature& s) { return Multivector{s, 0, 1, 0, 0}; }
Multivector e2_of(const Signature& s) { return Multivector{s, 0, 0, 1, 0}; }
Multivector e12_of(const Signature& s) { return Multivector{s, 0, 0, 0, 1}; }

}  // namespace

TEST_CASE("signatures carry the advertised squares and dimensions") {
  CHECK(cl01.dim() == 1);
  CHECK(cl10.dim() == 1);
  CHECK(cl02.dim() == 2);
  CHECK(cl11.dim() == 2);
  CHECK(cl20.dim() == 2);

  CHECK(cl01.sq1 == -1);
  CHECK(cl10.sq1 == 1);
  CHECK(cl02.sq1 == -1);
  CHECK(cl02.sq2 == -1);
  CHECK(cl11.sq1 == 1);
  CHECK(cl11.sq2 == -1);
  CHECK(cl20.sq1 == 1);
  CHECK(cl20.sq2 == 1);

  for (const Signature& s : kAll) CHECK(s.sq12 == -s.sq1 * s.sq2);

  CHECK(signature_from_name("cl11").has_value());
  CHECK(signature_from_name("cl11")->tag == Algebra::cl11);
  CHECK(!signature_from_name("cl30").has_value());
  CHECK(!signature_from_name("").has_value());
  CHECK(to_string(Algebra::cl02) == "cl02");
}

TEST_CASE("basis products follow the multiplication table") {
  for (const Signature& s : kAll) {
    const Multivector one = scalar_mv(s, 1.0);
    const Multivector e1 = e1_of(s);
    CHECK(approx_eq(gp(e1, e1), scalar_mv(s, s.sq1), 0.0));
    CHECK(approx_eq(gp(one, e1), e1, 0.0));

    if (s.dim() == 2) {
      const Multivector e2 = e2_of(s);
      const Multivector e12 = e12_of(s);
      CHECK(approx_eq(gp(e2, e2), scalar_mv(s, s.sq2), 0.0));
      CHECK(approx_eq(gp(e12, e12), scalar_mv(s, s.sq12), 0.0));
      CHECK(approx_eq(gp(e1, e2), e12, 0.0));
      CHECK(approx_eq(gp(e2, e1), -e12, 0.0));                        // anticommute
      CHECK(approx_eq(gp(e1, e12), s.sq1 * e2, 0.0));                 // e1(e1e2)
      CHECK(approx_eq(gp(e12, e2), s.sq2 * e1, 0.0));                 // (e1e2)e2
    }
  }
}

TEST_CASE("negative-definite 2d algebra multiplies like quaternions") {
  // (1, e1, e2, e12) behaves as (1, i, j, k): ij = k, jk = i, ki = j.
  const Multivector i = e1_of(cl02), j = e2_of(cl02), k = e12_of(cl02);
  CHECK(approx_eq(gp(i, j), k, 0.0));
  CHECK(approx_eq(gp(j, k), i, 0.0));
  CHECK(approx_eq(gp(k, i), j, 0.0));
  CHECK(approx_eq(gp(i, i), scalar_mv(cl02, -1.0), 0.0));
  CHECK(approx_eq(gp(gp(i, j), k), scalar_mv(cl02, -1.0), 0.0));  // ijk = -1
}

TEST_CASE("geometric product is associative") {
  const Multivector x{cl11, 0.3, -1.2, 0.7, 2.0};
  const Multivector y{cl11, -0.5, 0.4, 1.1, -0.2};
  const Multivector z{cl11, 2.0, -0.3, 0.9, 0.6};
  CHECK(max_abs_diff(gp(gp(x, y), z), gp(x, gp(y, z))) <= 1e-13);
}

TEST_CASE("checked constructor rejects bad coefficients") {
  CHECK_THROWS_AS((void)mv(cl10, 1.0, 0.0, 1.0, 0.0), error);
  CHECK_THROWS_AS((void)mv(cl01, 1.0, 0.0, 0.0, -2.0), error);
  CHECK_THROWS_AS((void)mv(cl20, std::nan(""), 0, 0, 0), error);
  CHECK_THROWS_AS((void)mv(cl20, 0, 1.0 / 0.0, 0, 0), error);
  try {
    (void)mv(cl10, 1.0, 0.0, 1.0, 0.0);
  } catch (const error& e) {
    CHECK(e.code() == errc::non_zero_1d_component);
  }
  CHECK(approx_eq(mv(cl10, 2.0, 3.0), Multivector{cl10, 2, 3, 0, 0}, 0.0));
}

TEST_CASE("involutions flip the advertised grades and compose") {
  const Multivector x{cl20, 1.0, 2.0, -3.0, 4.0};
  CHECK(approx_eq(involute(x, Involution::reverse),
                  Multivector{cl20, 1, 2, -3, -4}, 0.0));
  CHECK(approx_eq(involute(x, Involution::grade_involute),
                  Multivector{cl20, 1, -2, 3, 4}, 0.0));
  CHECK(approx_eq(involute(x, Involution::clifford_conjugate),
                  Multivector{cl20, 1, -2, 3, -4}, 0.0));
  const Multivector composed =
      involute(involute(x, Involution::reverse), Involution::grade_involute);
  CHECK(approx_eq(composed, involute(x, Involution::clifford_conjugate), 0.0));

  // Each involution is an anti/auto-morphism of the product.
  const Multivector y{cl20, -0.5, 1.5, 0.25, -2.0};
  CHECK(max_abs_diff(involute(gp(x, y), Involution::reverse),
                     gp(involute(y, Involution::reverse),
                        involute(x, Involution::reverse))) <= 1e-14);
  CHECK(max_abs_diff(involute(gp(x, y), Involution::grade_involute),
                     gp(involute(x, Involution::grade_involute),
                        involute(y, Involution::grade_involute))) <= 1e-14);
}

TEST_CASE("norm report matches hand-computed quadratic forms") {
  const Multivector x{cl11, 2.0, 4.0, -5.0, -1.0};  // qsq = 16 - 25 + 1
  const NormReport n = norms(x);
  CHECK(n.qsq == doctest::Approx(-8.0).epsilon(1e-15));
  CHECK(n.det == doctest::Approx(12.0).epsilon(1e-15));
  CHECK(n.seminorm_q == doctest::Approx(std::sqrt(8.0)));
  CHECK(n.seminorm_b == doctest::Approx(std::sqrt(12.0)));
  CHECK(n.scalar == 2.0);

  // det equals the scalar part of x * conj(x).
  const Multivector xc = gp(x, involute(x, Involution::clifford_conjugate));
  CHECK(xc.a0 == doctest::Approx(n.det));
  CHECK(std::abs(xc.a1) + std::abs(xc.a2) + std::abs(xc.a12) <= 1e-14);
}

TEST_CASE("det stays accurate under near-cancellation") {
  // b0^2 - b1^2 with b0 = 1 + d suffers catastrophic cancellation in
  // plain double arithmetic; the compensated path keeps full precision.
  const double b0 = 1.0 + 1e-9;
  const double d = b0 - 1.0;  // the offset the stored double actually has
  const NormReport n = norms(Multivector{cl10, b0, 1.0, 0, 0});
  const double expected = 2.0 * d + d * d;
  CHECK(std::abs(n.det - expected) <= 1e-21);
}

TEST_CASE("inverse multiplies back to one and rejects null inputs") {
  const Multivector x{cl10, 2.0, 1.0, 0, 0};
  CHECK(max_abs_diff(gp(x, inverse(x)), scalar_mv(cl10, 1.0)) <= 1e-15);
  CHECK(approx_eq(inverse(x), Multivector{cl10, 2.0 / 3, -1.0 / 3, 0, 0}, 1e-15));

  for (const Signature& s : kAll) {
    const Multivector y = s.dim() == 1 ? Multivector{s, 0.7, -0.3, 0, 0}
                                       : Multivector{s, 0.7, -0.3, 0.2, 1.4};
    if (std::abs(norms(y).det) < 1e-2) continue;
    CHECK(max_abs_diff(gp(y, inverse(y)), scalar_mv(s, 1.0)) <= 1e-13);
    CHECK(max_abs_diff(gp(inverse(y), y), scalar_mv(s, 1.0)) <= 1e-13);
  }

  CHECK_THROWS_AS((void)inverse(Multivector{cl10, 1, 1, 0, 0}), error);  // det = 0
  CHECK_THROWS_AS((void)inverse(scalar_mv(cl20, 0.0)), error);
}

TEST_CASE("qsplit separates scalar from qvector part") {
  const QSplit q = qsplit(Multivector{cl20, 3.0, 1.0, -2.0, 0.5});
  CHECK(q.scalar == 3.0);
  CHECK(q.qvec.a0 == 0.0);
  CHECK(q.qvec.a1 == 1.0);
  CHECK(q.qvec.a2 == -2.0);
  CHECK(q.qvec.a12 == 0.5);
}

TEST_CASE("arithmetic operators match componentwise expectations") {
  const Multivector x{cl02, 1, 2, 3, 4};
  const Multivector y{cl02, 0.5, -1, 0, 2};
  CHECK(approx_eq(x + y, Multivector{cl02, 1.5, 1, 3, 6}, 0.0));
  CHECK(approx_eq(x - y, Multivector{cl02, 0.5, 3, 3, 2}, 0.0));
  CHECK(approx_eq(-x, Multivector{cl02, -1, -2, -3, -4}, 0.0));
  CHECK(approx_eq(2.0 * x, Multivector{cl02, 2, 4, 6, 8}, 0.0));
  CHECK(approx_eq(x + 1.0, Multivector{cl02, 2, 2, 3, 4}, 0.0));
  CHECK(approx_eq(x * y, gp(x, y), 0.0));
  CHECK_THROWS_AS((void)(x + Multivector{cl20, 1, 0, 0, 0}), error);
}

TEST_CASE("coefficient scale picks the largest magnitude") {
  CHECK(coeff_scale(Multivector{cl20, 1, -7, 2, 3}) == 7.0);
  CHECK(coeff_scale(scalar_mv(cl20, 0.0)) == 0.0);
}

TEST_CASE("canonical text form") {
  CHECK(to_string(Multivector{cl20, 1.5, 0, -2, 1}) == "1.5 - 2*e2 + e12");
  CHECK(to_string(scalar_mv(cl02, 0.0)) == "0");
  CHECK(to_string(Multivector{cl02, 0, 0, 0, -1}) == "-e12");
  CHECK(to_string(Multivector{cl10, -2, 1, 0, 0}) == "-2 + e1");
  CHECK(to_string(Multivector{cl10, 0, 0.5, 0, 0}) == "0.5*e1");
  CHECK(to_string(Multivector{cl20, 0, 0, -0.0, 0}) == "0");  // -0 is zero
}

TEST_CASE("double formatting round-trips") {
  for (double v : {0.1, -4e-3, 1e300, 2.0, 1e-7, -0.0, 123456.789}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
  // Exponents always appear signed, so "4e1" stays unambiguous input.
  CHECK(format_double(40.0) == "40");
  CHECK(format_double(1e-7).find("e-") != std::string::npos);
  CHECK(format_double(1e21).find("e+") != std::string::npos);
}

TEST_CASE("error text names the failure class") {
  CHECK(to_string(errc::non_zero_1d_component) == "NonZero1DComponent");
  CHECK(to_string(errc::no_logarithm) == "NoLogarithm");
  CHECK(to_string(errc::out_of_convergence_domain) == "OutOfConvergenceDomain");
}
