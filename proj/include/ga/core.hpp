#pragma once

// Coefficient-level arithmetic for the five real Clifford algebras with
// p + q <= 2. A multivector is stored as four coefficients
//   x = a0 + a1*e1 + a2*e2 + a12*e12
// regardless of dimension; one-dimensional algebras keep a2 = a12 = 0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ga {

enum class Algebra : std::uint8_t { cl01, cl10, cl02, cl11, cl20 };

// Squares of the basis elements of Cl(p,q). For p + q = 2 the bivector
// square is forced: e12*e12 = -(e1*e1)*(e2*e2).
struct Signature {
  Algebra tag{Algebra::cl01};
  int p{0};
  int q{0};
  double sq1{0};
  double sq2{0};
  double sq12{0};

  constexpr int dim() const noexcept { return p + q; }
};

constexpr bool operator==(const Signature& a, const Signature& b) noexcept {
  return a.tag == b.tag;
}
constexpr bool operator!=(const Signature& a, const Signature& b) noexcept {
  return a.tag != b.tag;
}

inline constexpr Signature cl01{Algebra::cl01, 0, 1, -1.0, 0.0, 0.0};
inline constexpr Signature cl10{Algebra::cl10, 1, 0, +1.0, 0.0, 0.0};
inline constexpr Signature cl02{Algebra::cl02, 0, 2, -1.0, -1.0, -1.0};
inline constexpr Signature cl11{Algebra::cl11, 1, 1, +1.0, -1.0, +1.0};
inline constexpr Signature cl20{Algebra::cl20, 2, 0, +1.0, +1.0, -1.0};

const Signature& signature(Algebra a);
std::optional<Signature> signature_from_name(std::string_view name);
std::string_view to_string(Algebra a);

enum class errc {
  non_zero_1d_component,
  non_finite_coefficient,
  signature_mismatch,
  singular_multivector,
  zero_argument,
  unsupported_kind,
  domain_violation,
  unsupported_signature,
  no_logarithm,
  no_real_root,
  out_of_convergence_domain,
  basis_out_of_dimension,
  singular_division,
  lex_error,
  parse_error,
};

std::string_view to_string(errc c);

// All failures surface as this exception. Text errors (lexing, parsing,
// evaluation) carry a character position into the source expression.
class error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  error(errc code, const std::string& message, std::size_t position = npos)
      : std::runtime_error(message), code_(code), position_(position) {}

  errc code() const noexcept { return code_; }
  std::size_t position() const noexcept { return position_; }

 private:
  errc code_;
  std::size_t position_;
};

struct Multivector {
  Signature sig{cl01};
  double a0{0};
  double a1{0};
  double a2{0};
  double a12{0};
};

// Checked constructor: rejects NaN/inf coefficients and nonzero e2/e12
// components in one-dimensional algebras. Internal arithmetic builds
// Multivector directly and preserves both invariants.
Multivector mv(const Signature& sig, double a0, double a1 = 0.0,
               double a2 = 0.0, double a12 = 0.0);

inline Multivector scalar_mv(const Signature& sig, double v) {
  return Multivector{sig, v, 0.0, 0.0, 0.0};
}

// Geometric product.
Multivector gp(const Multivector& x, const Multivector& y);

enum class Involution { reverse, grade_involute, clifford_conjugate };

// reverse negates a12; grade_involute negates a1, a2; clifford_conjugate
// negates a1, a2, a12 (it is the composition of the other two).
Multivector involute(const Multivector& x, Involution kind);

struct QSplit {
  double scalar;
  Multivector qvec;  // a1*e1 + a2*e2 + a12*e12, scalar part zeroed
};
QSplit qsplit(const Multivector& x);

// qsq is the scalar square of the non-scalar part (the grade-mixing
// quadratic form); det = a0^2 - qsq equals gp(x, conj(x))'s scalar part.
// Both are computed with compensated summation so they stay accurate to
// their own ulp even under heavy cancellation near the light cone.
struct NormReport {
  double qsq;
  double seminorm_q;  // sqrt(|qsq|)
  double det;
  double seminorm_b;  // sqrt(|det|)
  double scalar;      // a0
};
NormReport norms(const Multivector& x);

// Largest absolute coefficient; scale reference for tolerance bands.
double coeff_scale(const Multivector& x);

// Inverse via clifford_conjugate(x)/det. Throws singular_multivector when
// |det| <= 1e-12 * max(1, coeff_scale^2).
Multivector inverse(const Multivector& x);

// Componentwise |x - y| <= tol. Throws signature_mismatch.
bool approx_eq(const Multivector& x, const Multivector& y, double tol);
double max_abs_diff(const Multivector& x, const Multivector& y);

// Canonical text form: "a0 + a1*e1 + a2*e2 + a12*e12" with zero terms
// omitted, unit coefficients on basis terms dropped, and shortest
// round-trip number formatting. The zero multivector prints as "0".
std::string to_string(const Multivector& x);
std::string format_double(double v);

Multivector operator+(const Multivector& x, const Multivector& y);
Multivector operator-(const Multivector& x, const Multivector& y);
Multivector operator-(const Multivector& x);
Multivector operator*(const Multivector& x, const Multivector& y);
Multivector operator*(double s, const Multivector& x);
Multivector operator*(const Multivector& x, double s);
Multivector operator+(const Multivector& x, double s);
Multivector operator+(double s, const Multivector& x);

}  // namespace ga
