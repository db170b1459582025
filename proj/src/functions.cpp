#include "ga/functions.hpp"

#include <cmath>

namespace ga {

namespace {

constexpr double kPi = 3.14159265358979323846;

double vec_mag2(const Multivector& x) {
  return x.a1 * x.a1 + x.a2 * x.a2 + x.a12 * x.a12;
}

// Default winding axis for logs of positive scalars (any unit quaternionic
// vector works; these square to -1 in their algebra).
Multivector default_axis(const Signature& sig) {
  switch (sig.tag) {
    case Algebra::cl01: return Multivector{sig, 0, 1, 0, 0};
    case Algebra::cl10: break;  // no element squares to -1
    case Algebra::cl02: return Multivector{sig, 0, 0, 0, 1};
    case Algebra::cl11: return Multivector{sig, 0, 0, 1, 0};
    case Algebra::cl20: return Multivector{sig, 0, 0, 0, -1};
  }
  throw error(errc::unsupported_signature, "no winding axis in cl10");
}

// Unit quaternionic vector for the free log family. cl02 needs its own
// parametrization (unit_free_mv covers only the hyperbolic algebras): the
// root set is the unit sphere of the definite form, a disk chart.
Multivector family_axis(const Signature& sig, double f1, double f2) {
  switch (sig.tag) {
    case Algebra::cl02: {
      const double arg = 1.0 - f1 * f1 - f2 * f2;
      if (arg < 0.0) {
        throw error(errc::domain_violation,
                    "cl02 family parameters need f1^2 + f2^2 <= 1");
      }
      return Multivector{sig, 0, f1, f2, -std::sqrt(arg)};
    }
    case Algebra::cl11:
    case Algebra::cl20:
      return unit_free_mv(sig, f1, f2);
    default:
      throw error(errc::unsupported_signature,
                  "no free log family in this algebra");
  }
}

std::string_view winding_params(const Signature& sig) {
  switch (sig.tag) {
    case Algebra::cl01: return "principal + 2*pi*k*e1, k integer";
    case Algebra::cl02: return "principal + 2*pi*k*axis, k integer";
    case Algebra::cl11: return "principal + 2*pi*k*axis, k integer";
    case Algebra::cl20: return "principal + 2*pi*k*axis, k integer";
    default: return "principal + 2*pi*k*axis, k integer";
  }
}

std::string_view free_family_params(const Signature& sig) {
  switch (sig.tag) {
    case Algebra::cl02:
      return "log(-a0) + pi*(2k+1)*(f1*e1 + f2*e2 - sqrt(1-f1^2-f2^2)*e12), "
             "f1^2+f2^2 <= 1, k integer";
    case Algebra::cl11:
      return "log(-a0) + pi*(2k+1)*(f1*e1 + sqrt(1+f1^2+f12^2)*e2 + f12*e12), "
             "k integer";
    case Algebra::cl20:
      return "log(-a0) + pi*(2k+1)*(f1*e1 + f2*e2 - sqrt(1+f1^2+f2^2)*e12), "
             "k integer";
    default:
      return "";
  }
}

constexpr std::string_view kAsymptoticParams =
    "finite_part + log(eps)*divergent_direction, eps -> 0+";

// cos/sin-over-angle pair of exp restricted to a quaternionic vector:
// exp(V) = c + g*V. Branches on the exact sign of the vector square; the
// g factors are the entire functions sin(t)/t and sinh(t)/t.
struct CgPair {
  double c, g;
};

CgPair exp_factors(double qsq) {
  if (qsq == 0.0) return {1.0, 1.0};
  const double t = std::sqrt(std::abs(qsq));
  if (qsq < 0.0) return {std::cos(t), std::sin(t) / t};
  return {std::cosh(t), std::sinh(t) / t};
}

}  // namespace

std::string_view to_string(SectorTag t) {
  switch (t) {
    case SectorTag::trig_sector: return "TrigSector";
    case SectorTag::hyperbolic_sector: return "HyperbolicSector";
    case SectorTag::light_cone: return "LightCone";
    case SectorTag::null_qvector: return "NullQVector";
    case SectorTag::negative_scalar_axis: return "NegativeScalarAxis";
    case SectorTag::positive_scalar_axis: return "PositiveScalarAxis";
    case SectorTag::no_solution: return "NoSolution";
    case SectorTag::zero_mv: return "ZeroMV";
  }
  return "?";
}

std::string_view to_string(LogKind k) {
  switch (k) {
    case LogKind::principal: return "principal";
    case LogKind::winding: return "winding";
    case LogKind::free_family: return "free_family";
    case LogKind::asymptotic: return "asymptotic";
    case LogKind::no_solution: return "no_solution";
  }
  return "?";
}

SectorClass classify_log(const Multivector& x) {
  const NormReport nr = norms(x);
  const double s = coeff_scale(x);
  if (s == 0.0) return {SectorTag::zero_mv, nr};
  const double band = classification_band(s);

  if (x.sig.dim() == 1) {
    if (x.sig.tag == Algebra::cl01) return {SectorTag::trig_sector, nr};
    // cl10: logs exist only right of the light cone.
    if (x.a1 * x.a1 <= band) {
      return {x.a0 > 0.0 ? SectorTag::hyperbolic_sector : SectorTag::no_solution,
              nr};
    }
    if (x.a0 > 0.0 && nr.det > band) return {SectorTag::hyperbolic_sector, nr};
    if (x.a0 > 0.0 && x.a1 > 0.0 && std::abs(nr.det) <= band) {
      return {SectorTag::light_cone, nr};
    }
    return {SectorTag::no_solution, nr};
  }

  if (vec_mag2(x) <= band) {
    return {x.a0 > 0.0 ? SectorTag::positive_scalar_axis
                       : SectorTag::negative_scalar_axis,
            nr};
  }
  if (std::abs(nr.qsq) <= band) {
    // Null non-zero quaternionic vector: exp image requires a positive
    // scalar part.
    return {x.a0 > 0.0 ? SectorTag::null_qvector : SectorTag::no_solution, nr};
  }
  if (nr.qsq < 0.0) return {SectorTag::trig_sector, nr};
  if (x.a0 > 0.0 && nr.det > band) return {SectorTag::hyperbolic_sector, nr};
  if (x.a0 > 0.0 && std::abs(nr.det) <= band) return {SectorTag::light_cone, nr};
  return {SectorTag::no_solution, nr};
}

Multivector exp(const Multivector& x) {
  const double qsq = norms(Multivector{x.sig, 0, x.a1, x.a2, x.a12}).qsq;
  const CgPair f = exp_factors(qsq);
  const double e = std::exp(x.a0);
  return Multivector{x.sig, e * f.c, e * f.g * x.a1, e * f.g * x.a2,
                     e * f.g * x.a12};
}

LogResult log(const Multivector& x) {
  const SectorClass sc = classify_log(x);
  LogResult r{LogKind::no_solution, x, sc, {}, {}, {}, {}, 0.0, ""};

  switch (sc.tag) {
    case SectorTag::zero_mv:
      throw error(errc::zero_argument, "log of the zero multivector");

    case SectorTag::no_solution:
      return r;

    case SectorTag::trig_sector: {
      r.kind = LogKind::winding;
      if (x.sig.tag == Algebra::cl01) {
        // Covers the whole punctured plane, including b1 = 0 where the
        // angle degenerates to 0 or pi on the default axis.
        const double mag = std::abs(x.a1);
        const double angle = std::atan2(mag, x.a0);
        const Multivector axis{x.sig, 0, x.a1 == 0.0 ? 1.0 : (x.a1 < 0 ? -1.0 : 1.0),
                               0, 0};
        r.principal = Multivector{x.sig, 0.5 * std::log(sc.norms.det), 0, 0, 0} +
                      angle * axis;
        r.axis = axis;
      } else {
        const double mag = sc.norms.seminorm_q;  // sqrt(-qsq) > 0 here
        const double angle = std::atan2(mag, x.a0);
        const Multivector axis =
            (1.0 / mag) * Multivector{x.sig, 0, x.a1, x.a2, x.a12};
        r.principal = Multivector{x.sig, 0.5 * std::log(sc.norms.det), 0, 0, 0} +
                      angle * axis;
        r.axis = axis;
      }
      r.family_params = winding_params(x.sig);
      return r;
    }

    case SectorTag::hyperbolic_sector: {
      r.kind = LogKind::principal;
      const double half_log_det = 0.5 * std::log(sc.norms.det);
      if (x.sig.tag == Algebra::cl10) {
        // atanh form stays finite for a1 = 0 and avoids the cancellation
        // in a0 - |a1| near the cone: a0 + |a1| and det are both accurate.
        const double angle =
            std::log(x.a0 + std::abs(x.a1)) - half_log_det;
        const double sign = x.a1 == 0.0 ? 0.0 : (x.a1 < 0 ? -1.0 : 1.0);
        r.principal = Multivector{x.sig, half_log_det, sign * angle, 0, 0};
      } else {
        const double mag = sc.norms.seminorm_q;  // sqrt(qsq) > 0 here
        const double angle = std::log(x.a0 + mag) - half_log_det;
        r.principal =
            Multivector{x.sig, half_log_det, 0, 0, 0} +
            (angle / mag) * Multivector{x.sig, 0, x.a1, x.a2, x.a12};
      }
      return r;
    }

    case SectorTag::null_qvector: {
      r.kind = LogKind::principal;
      r.principal = Multivector{x.sig, std::log(x.a0), x.a1 / x.a0,
                                x.a2 / x.a0, x.a12 / x.a0};
      return r;
    }

    case SectorTag::positive_scalar_axis: {
      r.kind = LogKind::winding;
      r.principal = scalar_mv(x.sig, std::log(x.a0));
      r.axis = default_axis(x.sig);
      r.family_params = winding_params(x.sig);
      return r;
    }

    case SectorTag::negative_scalar_axis: {
      r.kind = LogKind::free_family;
      r.family_log = std::log(-x.a0);
      r.principal =
          scalar_mv(x.sig, r.family_log) + kPi * family_axis(x.sig, 0, 0);
      r.family_params = free_family_params(x.sig);
      return r;
    }

    case SectorTag::light_cone: {
      r.kind = LogKind::asymptotic;
      const double half_log2 = 0.5 * std::log(2.0);
      if (x.sig.dim() == 1) {
        // finite = (log(2*a0)/2)*(1 + e1), divergence along (1 - e1)/2.
        const double h = 0.5 * std::log(2.0 * x.a0);
        r.finite_part = Multivector{x.sig, h, h, 0, 0};
        r.divergent_direction = Multivector{x.sig, 0.5, -0.5, 0, 0};
      } else {
        const double mag = sc.norms.seminorm_q;
        const Multivector unit =
            (1.0 / mag) * Multivector{x.sig, 0, x.a1, x.a2, x.a12};
        r.finite_part =
            Multivector{x.sig, std::log(x.a0) + half_log2, 0, 0, 0} +
            half_log2 * unit;
        r.divergent_direction = 0.5 * (scalar_mv(x.sig, 1.0) - unit);
      }
      r.family_params = kAsymptoticParams;
      return r;
    }
  }
  throw error(errc::unsupported_kind, "unreachable sector");
}

Multivector log_eval(const LogResult& r, long k, double f1, double f2) {
  switch (r.kind) {
    case LogKind::principal:
      return *r.principal;
    case LogKind::winding:
      return *r.principal + (2.0 * kPi * static_cast<double>(k)) * *r.axis;
    case LogKind::free_family:
      return scalar_mv(r.input.sig, r.family_log) +
             (kPi * static_cast<double>(2 * k + 1)) *
                 family_axis(r.input.sig, f1, f2);
    case LogKind::asymptotic:
      throw error(errc::unsupported_kind,
                  "asymptotic log has no finite branch; use "
                  "log_asymptotic_eval");
    case LogKind::no_solution:
      throw error(errc::unsupported_kind, "no logarithm exists");
  }
  throw error(errc::unsupported_kind, "unknown log kind");
}

Multivector log_asymptotic_eval(const LogResult& r, double eps) {
  if (r.kind != LogKind::asymptotic) {
    throw error(errc::unsupported_kind, "result is not asymptotic");
  }
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw error(errc::domain_violation, "eps must be a positive real");
  }
  return *r.finite_part + std::log(eps) * *r.divergent_direction;
}

bool RootFamily::in_domain(double c1, double c2) const {
  const double arg = (target - sig.sq1 * c1 * c1 - sig.sq2 * c2 * c2) / sig.sq12;
  return arg >= 0.0;
}

Multivector RootFamily::at(double c1, double c2, int outer_sign,
                           int root_sign) const {
  const double arg = (target - sig.sq1 * c1 * c1 - sig.sq2 * c2 * c2) / sig.sq12;
  if (arg < 0.0) {
    throw error(errc::domain_violation,
                "family parameters outside the real-root domain");
  }
  const double o = outer_sign < 0 ? -scale : scale;
  const double e12 = (root_sign < 0 ? -1.0 : 1.0) * std::sqrt(arg);
  return Multivector{sig, 0, o * c1, o * c2, o * e12};
}

std::string RootFamily::describe() const {
  std::string m = scale == 1.0 ? "" : format_double(scale) + "*";
  std::string head = "+-" + m + "(c1*e1 + c2*e2 +- sqrt(";
  const auto term = [](double q, const char* name) -> std::string {
    if (q == 0.0) return "";
    return (q < 0.0 ? std::string(" - ") : std::string(" + ")) + name;
  };
  // arg = (target - sq1*c1^2 - sq2*c2^2)/sq12 spelled out per signature
  std::string arg = format_double(target / sig.sq12);
  arg += term(-sig.sq1 / sig.sq12, "c1^2");
  arg += term(-sig.sq2 / sig.sq12, "c2^2");
  return head + arg + ")*e12)";
}

namespace {

void push_root(SqrtResult& out, const Multivector& r, double dup_tol) {
  for (const Multivector& p : out.isolated) {
    if (max_abs_diff(p, r) <= dup_tol) return;
  }
  out.isolated.push_back(r);
}

void push_verified(SqrtResult& out, const Multivector& r, double verify_tol,
                   double dup_tol) {
  if (max_abs_diff(gp(r, r), out.input) <= verify_tol) {
    push_root(out, r, dup_tol);
  }
}

// Root sets of an exact scalar: isolated representatives plus, in two
// dimensions, the continuum family on the quadric {V : V*V = input}.
void scalar_roots(SqrtResult& out, double lambda, double verify_tol,
                  double dup_tol) {
  const Signature& sig = out.input.sig;
  const double m = std::sqrt(std::abs(lambda));
  const auto vec = [&](double c1, double c2, double c12) {
    return Multivector{sig, 0, m * c1, m * c2, m * c12};
  };
  const double inv_rt2 = 1.0 / std::sqrt(2.0);

  if (lambda > 0.0) {
    push_verified(out, scalar_mv(sig, m), verify_tol, dup_tol);
    push_verified(out, scalar_mv(sig, -m), verify_tol, dup_tol);
    switch (sig.tag) {
      case Algebra::cl10:
        push_verified(out, vec(1, 0, 0), verify_tol, dup_tol);
        push_verified(out, vec(-1, 0, 0), verify_tol, dup_tol);
        break;
      case Algebra::cl11:
        push_verified(out, vec(1, 0, 0), verify_tol, dup_tol);
        push_verified(out, vec(inv_rt2, 0, inv_rt2), verify_tol, dup_tol);
        push_verified(out, vec(inv_rt2, 0, -inv_rt2), verify_tol, dup_tol);
        out.families.push_back(RootFamily{sig, m, +1.0});
        break;
      case Algebra::cl20:
        push_verified(out, vec(1, 0, 0), verify_tol, dup_tol);
        push_verified(out, vec(0, 1, 0), verify_tol, dup_tol);
        push_verified(out, vec(inv_rt2, inv_rt2, 0), verify_tol, dup_tol);
        push_verified(out, vec(inv_rt2, -inv_rt2, 0), verify_tol, dup_tol);
        out.families.push_back(RootFamily{sig, m, +1.0});
        break;
      default:
        break;  // cl01: only the scalar pair; cl02: ditto (definite form)
    }
    return;
  }

  if (lambda < 0.0) {
    switch (sig.tag) {
      case Algebra::cl01:
        push_verified(out, vec(1, 0, 0), verify_tol, dup_tol);
        push_verified(out, vec(-1, 0, 0), verify_tol, dup_tol);
        break;
      case Algebra::cl10:
        break;  // no real roots of a negative scalar
      case Algebra::cl02:
        push_verified(out, vec(1, 0, 0), verify_tol, dup_tol);
        push_verified(out, vec(0, 1, 0), verify_tol, dup_tol);
        push_verified(out, vec(0, 0, 1), verify_tol, dup_tol);
        push_verified(out, vec(inv_rt2, inv_rt2, 0), verify_tol, dup_tol);
        push_verified(out, vec(inv_rt2, -inv_rt2, 0), verify_tol, dup_tol);
        push_verified(out, vec(inv_rt2, 0, inv_rt2), verify_tol, dup_tol);
        push_verified(out, vec(inv_rt2, 0, -inv_rt2), verify_tol, dup_tol);
        push_verified(out, vec(0, inv_rt2, inv_rt2), verify_tol, dup_tol);
        push_verified(out, vec(0, inv_rt2, -inv_rt2), verify_tol, dup_tol);
        out.families.push_back(RootFamily{sig, m, -1.0});
        break;
      case Algebra::cl11:
        push_verified(out, vec(0, 1, 0), verify_tol, dup_tol);
        out.families.push_back(RootFamily{sig, m, -1.0});
        break;
      case Algebra::cl20:
        push_verified(out, vec(0, 0, 1), verify_tol, dup_tol);
        out.families.push_back(RootFamily{sig, m, -1.0});
        break;
    }
    return;
  }

  push_root(out, scalar_mv(sig, 0.0), dup_tol);  // lambda == 0
}

}  // namespace

SqrtResult sqrt_all(const Multivector& x) {
  SqrtResult out{x, {}, {}};
  const double s = coeff_scale(x);
  const double verify_tol = 1e-11 * (1.0 + s);
  const double dup_tol = 1e-9 * (1.0 + s);

  if (s == 0.0) {
    out.isolated.push_back(scalar_mv(x.sig, 0.0));
    return out;
  }
  if (vec_mag2(x) == 0.0) {
    scalar_roots(out, x.a0, verify_tol, dup_tol);
    return out;
  }

  // Non-scalar input: every root has the form (t + B')/sqrt(2t) with
  // t = a0 +- sqrt(det); real whenever det >= 0 and t > 0. Both signs of
  // t can be admissible at once (four roots).
  const NormReport nr = norms(x);
  // An exact square can compute det a hair negative; only clearly negative
  // det rules out real roots.
  if (nr.det < -classification_band(s)) return out;
  const double rd = nr.det > 0.0 ? std::sqrt(nr.det) : 0.0;
  // Quadratic-root ordering: a0 -+ rd cancels near the scalar axis and the
  // cone, qsq/(a0 +- rd) never does.
  const double t_far = x.a0 >= 0.0 ? x.a0 + rd : x.a0 - rd;
  const double t_near = t_far == 0.0 ? 0.0 : nr.qsq / t_far;
  for (const double t : {t_far, t_near}) {
    if (!(t > 1e-12 * (1.0 + s))) continue;
    const double inv = 1.0 / std::sqrt(2.0 * t);
    const Multivector r{x.sig, t * inv, x.a1 * inv, x.a2 * inv, x.a12 * inv};
    push_verified(out, r, verify_tol, dup_tol);
    push_verified(out, -r, verify_tol, dup_tol);
  }
  return out;
}

std::pair<Multivector, Multivector> sqrt_explog(const Multivector& x) {
  if (coeff_scale(x) == 0.0) {
    throw error(errc::no_logarithm, "zero multivector has no logarithm");
  }
  const LogResult lr = log(x);
  if (!lr.principal.has_value()) {
    throw error(errc::no_logarithm,
                "input lies outside the finite-logarithm sectors");
  }
  const Multivector r = exp(0.5 * *lr.principal);
  return {r, -r};
}

Multivector exp_product(const Multivector& a, const Multivector& b) {
  if (a.sig != b.sig) {
    throw error(errc::signature_mismatch,
                "exp_product requires matching signatures");
  }
  const Multivector av{a.sig, 0, a.a1, a.a2, a.a12};
  const Multivector bv{b.sig, 0, b.a1, b.a2, b.a12};
  const CgPair fa = exp_factors(norms(av).qsq);
  const CgPair fb = exp_factors(norms(bv).qsq);

  // av*bv splits into a scalar (the symmetric part) and a quaternionic
  // vector (the antisymmetric part, half the commutator).
  const Multivector w = gp(av, bv);
  const Multivector comm{a.sig, 0, w.a1, w.a2, w.a12};

  const double e = std::exp(a.a0 + b.a0);
  const Multivector out =
      scalar_mv(a.sig, fa.c * fb.c + fa.g * fb.g * w.a0) +
      (fa.g * fb.c) * av + (fa.c * fb.g) * bv + (fa.g * fb.g) * comm;
  return e * out;
}

Multivector unit_free_mv(const Signature& sig, double f1, double f2) {
  switch (sig.tag) {
    case Algebra::cl11:
      // (f1, f12) chart: the e2 coefficient balances the form to -1.
      return Multivector{sig, 0, f1, std::sqrt(1.0 + f1 * f1 + f2 * f2), f2};
    case Algebra::cl20:
      return Multivector{sig, 0, f1, f2, -std::sqrt(1.0 + f1 * f1 + f2 * f2)};
    default:
      throw error(errc::unsupported_signature,
                  "unit free multivectors exist only in cl11 and cl20");
  }
}

}  // namespace ga
