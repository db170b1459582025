#pragma once

// Closed-form exponential, logarithm and square roots over the algebras in
// ga/core.hpp. The logarithm is multivalued; results carry their branch
// structure (winding axis, free two-parameter family, or an asymptotic
// finite-part/divergent-direction pair on the light cone) instead of a
// single number.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ga/core.hpp"

namespace ga {

enum class SectorTag {
  trig_sector,          // qsq < 0: bounded rotor factor, log winds
  hyperbolic_sector,    // qsq > 0, a0 > 0, det > 0: unique principal log
  light_cone,           // qsq > 0, a0 > 0, det = 0: log diverges, asymptotic
  null_qvector,         // qsq = 0, B' != 0, a0 > 0: parabolic, principal log
  negative_scalar_axis, // B' = 0, a0 < 0: free family of logs
  positive_scalar_axis, // B' = 0, a0 > 0: scalar log plus winding
  no_solution,          // outside the image of exp
  zero_mv,
};

std::string_view to_string(SectorTag t);

struct SectorClass {
  SectorTag tag;
  NormReport norms;
};

// Tolerance band for the equality tests (qsq = 0, det = 0, B' = 0) used by
// sector classification.
inline double classification_band(double scale) {
  return 1e-10 * (1.0 + scale * scale);
}

SectorClass classify_log(const Multivector& x);

// Total on every input: branches on the exact sign of qsq, with the
// sinc-style factors sin(t)/t and sinh(t)/t continuous through t = 0.
Multivector exp(const Multivector& x);

enum class LogKind { principal, winding, free_family, asymptotic, no_solution };

std::string_view to_string(LogKind k);

struct LogResult {
  LogKind kind;
  Multivector input;  // the argument this result describes
  SectorClass sector;

  // Finite principal value; absent for no_solution and asymptotic.
  std::optional<Multivector> principal;

  // winding: log branches are principal + 2*pi*k*axis, axis*axis = -1.
  std::optional<Multivector> axis;

  // asymptotic: branches evaluate to finite_part + log(eps)*divergent_direction.
  std::optional<Multivector> finite_part;
  std::optional<Multivector> divergent_direction;

  // free_family: branches are family_log + pi*(2k+1)*F(f1,f2) with F a unit
  // quaternionic vector; family_log = log(-a0).
  double family_log = 0.0;

  std::string_view family_params;  // human-readable branch description
};

LogResult log(const Multivector& x);

// Selects one branch. k picks the winding / family sheet; (f1, f2)
// parametrize the free family and are ignored otherwise.
Multivector log_eval(const LogResult& r, long k = 0, double f1 = 0.0,
                     double f2 = 0.0);

// Evaluates an asymptotic result at a concrete eps > 0;
// exp(log_asymptotic_eval(r, eps)) approaches r.input as eps -> 0+.
Multivector log_asymptotic_eval(const LogResult& r, double eps);

// Continuum of roots scale*(c1*e1 + c2*e2 +- sqrt(arg)*e12) squaring to
// scale^2 * target; exists only when the input is an exact scalar.
struct RootFamily {
  Signature sig;
  double scale;   // sqrt(|input scalar|)
  double target;  // +1 or -1

  bool in_domain(double c1, double c2) const;
  Multivector at(double c1, double c2, int outer_sign = +1,
                 int root_sign = +1) const;
  std::string describe() const;
};

struct SqrtResult {
  Multivector input;
  std::vector<Multivector> isolated;
  std::vector<RootFamily> families;
};

// Every real square root: the closed-form pairs (a0 +- sqrt(det) + B')
// normalized, plus the degenerate root sets and families of exact scalars.
// Every returned root is verified by gp(r, r) before being emitted; an
// empty result means no real root exists.
SqrtResult sqrt_all(const Multivector& x);

// +-exp(log(x)/2); requires a finite-logarithm sector, else no_logarithm.
std::pair<Multivector, Multivector> sqrt_explog(const Multivector& x);

// gp(exp(a), exp(b)) evaluated structurally from the scalar/vector splits
// of a and b, without forming either exponential.
Multivector exp_product(const Multivector& a, const Multivector& b);

// Unit quaternionic vector F with gp(F, F) = -1, parametrized per the two
// hyperbolic algebras: cl11 takes (f1, f12), cl20 takes (f1, f2). Other
// signatures raise unsupported_signature.
Multivector unit_free_mv(const Signature& sig, double f1, double f2);

}  // namespace ga
