#include "ga/core.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace ga {

namespace {

// Neumaier-compensated accumulator fed with exact products: fma recovers the
// rounding error of each multiply, so sums of the form +-a*b come out
// accurate to the ulp of the true result even when the terms cancel.
struct Accum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }

  void add_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    add(p);
    add(err);
  }

  double value() const { return sum + comp; }
};

}  // namespace

const Signature& signature(Algebra a) {
  switch (a) {
    case Algebra::cl01: return cl01;
    case Algebra::cl10: return cl10;
    case Algebra::cl02: return cl02;
    case Algebra::cl11: return cl11;
    case Algebra::cl20: return cl20;
  }
  throw error(errc::unsupported_signature, "unknown algebra tag");
}

std::optional<Signature> signature_from_name(std::string_view name) {
  if (name == "cl01") return cl01;
  if (name == "cl10") return cl10;
  if (name == "cl02") return cl02;
  if (name == "cl11") return cl11;
  if (name == "cl20") return cl20;
  return std::nullopt;
}

std::string_view to_string(Algebra a) {
  switch (a) {
    case Algebra::cl01: return "cl01";
    case Algebra::cl10: return "cl10";
    case Algebra::cl02: return "cl02";
    case Algebra::cl11: return "cl11";
    case Algebra::cl20: return "cl20";
  }
  return "?";
}

std::string_view to_string(errc c) {
  switch (c) {
    case errc::non_zero_1d_component: return "NonZero1DComponent";
    case errc::non_finite_coefficient: return "NonFiniteCoefficient";
    case errc::signature_mismatch: return "SignatureMismatch";
    case errc::singular_multivector: return "SingularMultivector";
    case errc::zero_argument: return "ZeroArgument";
    case errc::unsupported_kind: return "UnsupportedKind";
    case errc::domain_violation: return "DomainViolation";
    case errc::unsupported_signature: return "UnsupportedSignature";
    case errc::no_logarithm: return "NoLogarithm";
    case errc::no_real_root: return "NoRealRoot";
    case errc::out_of_convergence_domain: return "OutOfConvergenceDomain";
    case errc::basis_out_of_dimension: return "BasisOutOfDimension";
    case errc::singular_division: return "SingularDivision";
    case errc::lex_error: return "LexError";
    case errc::parse_error: return "ParseError";
  }
  return "?";
}

Multivector mv(const Signature& sig, double a0, double a1, double a2,
               double a12) {
  if (!std::isfinite(a0) || !std::isfinite(a1) || !std::isfinite(a2) ||
      !std::isfinite(a12)) {
    throw error(errc::non_finite_coefficient,
                "multivector coefficients must be finite");
  }
  if (sig.dim() == 1 && (a2 != 0.0 || a12 != 0.0)) {
    throw error(errc::non_zero_1d_component,
                "e2/e12 components must be zero in a one-dimensional algebra");
  }
  return Multivector{sig, a0, a1, a2, a12};
}

Multivector gp(const Multivector& x, const Multivector& y) {
  if (x.sig != y.sig) {
    throw error(errc::signature_mismatch,
                "geometric product requires matching signatures");
  }
  const double s1 = x.sig.sq1, s2 = x.sig.sq2, s12 = x.sig.sq12;
  return Multivector{
      x.sig,
      x.a0 * y.a0 + s1 * x.a1 * y.a1 + s2 * x.a2 * y.a2 + s12 * x.a12 * y.a12,
      x.a0 * y.a1 + x.a1 * y.a0 - s2 * x.a2 * y.a12 + s2 * x.a12 * y.a2,
      x.a0 * y.a2 + x.a2 * y.a0 + s1 * x.a1 * y.a12 - s1 * x.a12 * y.a1,
      x.a0 * y.a12 + x.a12 * y.a0 + x.a1 * y.a2 - x.a2 * y.a1};
}

Multivector involute(const Multivector& x, Involution kind) {
  switch (kind) {
    case Involution::reverse:
      return Multivector{x.sig, x.a0, x.a1, x.a2, -x.a12};
    case Involution::grade_involute:
      return Multivector{x.sig, x.a0, -x.a1, -x.a2, x.a12};
    case Involution::clifford_conjugate:
      return Multivector{x.sig, x.a0, -x.a1, -x.a2, -x.a12};
  }
  throw error(errc::unsupported_kind, "unknown involution");
}

QSplit qsplit(const Multivector& x) {
  return QSplit{x.a0, Multivector{x.sig, 0.0, x.a1, x.a2, x.a12}};
}

NormReport norms(const Multivector& x) {
  Accum q;
  q.add_prod(x.sig.sq1 * x.a1, x.a1);
  q.add_prod(x.sig.sq2 * x.a2, x.a2);
  q.add_prod(x.sig.sq12 * x.a12, x.a12);
  const double qsq = q.value();

  Accum d;
  d.add_prod(x.a0, x.a0);
  d.add_prod(-x.sig.sq1 * x.a1, x.a1);
  d.add_prod(-x.sig.sq2 * x.a2, x.a2);
  d.add_prod(-x.sig.sq12 * x.a12, x.a12);
  const double det = d.value();

  return NormReport{qsq, std::sqrt(std::abs(qsq)), det,
                    std::sqrt(std::abs(det)), x.a0};
}

double coeff_scale(const Multivector& x) {
  double m = std::abs(x.a0);
  m = std::max(m, std::abs(x.a1));
  m = std::max(m, std::abs(x.a2));
  m = std::max(m, std::abs(x.a12));
  return m;
}

Multivector inverse(const Multivector& x) {
  const double det = norms(x).det;
  const double s = coeff_scale(x);
  const double tol = 1e-12 * std::max(1.0, s * s);
  if (std::abs(det) <= tol) {
    throw error(errc::singular_multivector,
                "multivector has (near-)zero determinant norm");
  }
  return (1.0 / det) * involute(x, Involution::clifford_conjugate);
}

bool approx_eq(const Multivector& x, const Multivector& y, double tol) {
  return max_abs_diff(x, y) <= tol;
}

double max_abs_diff(const Multivector& x, const Multivector& y) {
  if (x.sig != y.sig) {
    throw error(errc::signature_mismatch,
                "comparison requires matching signatures");
  }
  double m = std::abs(x.a0 - y.a0);
  m = std::max(m, std::abs(x.a1 - y.a1));
  m = std::max(m, std::abs(x.a2 - y.a2));
  m = std::max(m, std::abs(x.a12 - y.a12));
  return m;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string out(buf, end);
  // to_chars always writes a signed exponent; keep a defensive fallback so a
  // bare "e" never reaches the lexer, which requires the sign.
  auto e = out.find_first_of("eE");
  if (e != std::string::npos && e + 1 < out.size() && out[e + 1] != '+' &&
      out[e + 1] != '-') {
    out.insert(e + 1, "+");
  }
  return out;
}

std::string to_string(const Multivector& x) {
  struct Term {
    double c;
    const char* basis;
  };
  const Term terms[] = {{x.a0, ""}, {x.a1, "e1"}, {x.a2, "e2"}, {x.a12, "e12"}};

  std::string out;
  for (const Term& t : terms) {
    if (t.c == 0.0) continue;  // catches -0.0 as well
    const double a = std::abs(t.c);
    if (out.empty()) {
      out += (t.c < 0.0) ? "-" : "";
    } else {
      out += (t.c < 0.0) ? " - " : " + ";
    }
    if (t.basis[0] == '\0') {
      out += format_double(a);
    } else {
      if (a != 1.0) {
        out += format_double(a);
        out += "*";
      }
      out += t.basis;
    }
  }
  if (out.empty()) out = "0";
  return out;
}

Multivector operator+(const Multivector& x, const Multivector& y) {
  if (x.sig != y.sig) {
    throw error(errc::signature_mismatch, "sum requires matching signatures");
  }
  return Multivector{x.sig, x.a0 + y.a0, x.a1 + y.a1, x.a2 + y.a2,
                     x.a12 + y.a12};
}

Multivector operator-(const Multivector& x, const Multivector& y) {
  if (x.sig != y.sig) {
    throw error(errc::signature_mismatch,
                "difference requires matching signatures");
  }
  return Multivector{x.sig, x.a0 - y.a0, x.a1 - y.a1, x.a2 - y.a2,
                     x.a12 - y.a12};
}

Multivector operator-(const Multivector& x) {
  return Multivector{x.sig, -x.a0, -x.a1, -x.a2, -x.a12};
}

Multivector operator*(const Multivector& x, const Multivector& y) {
  return gp(x, y);
}

Multivector operator*(double s, const Multivector& x) {
  return Multivector{x.sig, s * x.a0, s * x.a1, s * x.a2, s * x.a12};
}

Multivector operator*(const Multivector& x, double s) { return s * x; }

Multivector operator+(const Multivector& x, double s) {
  return Multivector{x.sig, x.a0 + s, x.a1, x.a2, x.a12};
}

Multivector operator+(double s, const Multivector& x) { return x + s; }

}  // namespace ga
