#include "ga/checks.hpp"

#include <algorithm>
#include <cmath>

#include "ga/functions.hpp"
#include "ga/sampling.hpp"
#include "ga/series.hpp"

namespace ga {

namespace {

struct Ctx {
  CheckReport rep;
  CheckOptions opt;

  void count_sector(SectorTag tag) {
    const std::string name(to_string(tag));
    for (auto& [k, v] : rep.per_sector) {
      if (k == name) {
        ++v;
        return;
      }
    }
    rep.per_sector.emplace_back(name, 1);
  }

  void expect(double residual, double tol, const Multivector& x,
              const char* what) {
    ++rep.samples;
    rep.max_residual = std::max(rep.max_residual, residual);
    if (!(residual <= tol)) {
      rep.passed = false;
      if (rep.failures.size() < 5) {
        rep.failures.push_back(std::string(what) + " residual " +
                               format_double(residual) + " at x = " +
                               to_string(x));
      }
    }
  }

  void expect_true(bool ok, const Multivector& x, const char* what) {
    ++rep.samples;
    if (!ok) {
      rep.passed = false;
      if (rep.failures.size() < 5) {
        rep.failures.push_back(std::string(what) + " at x = " + to_string(x));
      }
    }
  }
};

// Random parameters inside the free-family domain for the algebra.
void random_family_params(const Signature& sig, Rng& rng, double& f1,
                          double& f2) {
  if (sig.tag == Algebra::cl02) {
    do {
      f1 = rng.uniform(-1, 1);
      f2 = rng.uniform(-1, 1);
    } while (f1 * f1 + f2 * f2 > 1.0);
    return;
  }
  f1 = rng.uniform(-5, 5);
  f2 = rng.uniform(-5, 5);
}

void suite_roundtrip(Ctx& c) {
  const Signature& sig = c.opt.sig;
  const auto& sectors = reachable_sectors(sig);
  const std::size_t quota =
      std::max<std::size_t>(1, c.opt.samples / sectors.size());
  const double branch_tol = 10.0 * c.opt.tol;

  for (std::size_t si = 0; si < sectors.size(); ++si) {
    Rng rng = substream(c.opt.seed, 100 + si);
    for (std::size_t i = 0; i < quota; ++i) {
      const Multivector x = sample_sector(sig, sectors[si], rng);
      c.count_sector(sectors[si]);
      const LogResult lr = log(x);
      switch (lr.kind) {
        case LogKind::principal:
        case LogKind::winding:
        case LogKind::free_family: {
          c.expect(max_abs_diff(exp(*lr.principal), x), c.opt.tol, x,
                   "exp(log x) = x");
          if (lr.kind == LogKind::winding) {
            for (long k = -3; k <= 3; ++k) {
              c.expect(max_abs_diff(exp(log_eval(lr, k)), x), branch_tol, x,
                       "winding branch");
            }
          }
          if (lr.kind == LogKind::free_family) {
            for (int rep = 0; rep < 3; ++rep) {
              double f1, f2;
              random_family_params(sig, rng, f1, f2);
              const long k = rng.pick(-2, 2);
              c.expect(max_abs_diff(exp(log_eval(lr, k, f1, f2)), x),
                       branch_tol, x, "free-family branch");
            }
          }
          break;
        }
        case LogKind::asymptotic: {
          const double r4 =
              max_abs_diff(exp(log_asymptotic_eval(lr, 1e-4)), x);
          const double r6 =
              max_abs_diff(exp(log_asymptotic_eval(lr, 1e-6)), x);
          const double r8 =
              max_abs_diff(exp(log_asymptotic_eval(lr, 1e-8)), x);
          c.expect_true(r6 <= r4 && r8 <= r6 && r8 <= 1e-3, x,
                        "asymptotic residual shrinks with eps");
          break;
        }
        case LogKind::no_solution:
          ++c.rep.samples;  // reachable sector, nothing to invert
          break;
      }
    }
  }
}

void suite_involution(Ctx& c) {
  const Signature& sig = c.opt.sig;
  Rng rng = substream(c.opt.seed, 200);
  constexpr Involution kinds[] = {Involution::reverse,
                                  Involution::grade_involute,
                                  Involution::clifford_conjugate};
  for (std::size_t i = 0; i < c.opt.samples; ++i) {
    const Multivector x = random_mv(sig, rng);
    const Multivector y = random_mv(sig, rng);

    for (Involution k : kinds) {
      c.expect(max_abs_diff(exp(involute(x, k)), involute(exp(x), k)),
               c.opt.tol, x, "exp commutes with involution");
      c.expect(max_abs_diff(involute(involute(x, k), k), x), 0.0, x,
               "involution is self-inverse");
    }
    c.expect(max_abs_diff(involute(x, Involution::clifford_conjugate),
                          involute(involute(x, Involution::grade_involute),
                                   Involution::reverse)),
             0.0, x, "conj = rev of gradeinv");
    c.expect(max_abs_diff(involute(gp(x, y), Involution::reverse),
                          gp(involute(y, Involution::reverse),
                             involute(x, Involution::reverse))),
             c.opt.tol, x, "rev antidistributes over gp");

    // gp(x, conj x) is the determinant norm: scalar equals det, the other
    // grades cancel exactly.
    const Multivector n = gp(x, involute(x, Involution::clifford_conjugate));
    const NormReport nr = norms(x);
    const double s = coeff_scale(x);
    const double qtol = 1e-12 * (1.0 + s * s);
    c.expect(std::abs(n.a1) + std::abs(n.a2) + std::abs(n.a12), 0.0, x,
             "x * conj(x) is scalar");
    c.expect(std::abs(n.a0 - nr.det), qtol, x, "det = <x conj(x)>_0");

    const Multivector v = qsplit(x).qvec;
    c.expect(std::abs(gp(v, v).a0 - nr.qsq), qtol, x, "qsq = <v v>_0");
    c.expect(std::abs(gp(v, v).a1) + std::abs(gp(v, v).a2) +
                 std::abs(gp(v, v).a12),
             0.0, x, "v*v is scalar");

    if (sig.tag == Algebra::cl02 || sig.tag == Algebra::cl01) {
      c.expect_true(nr.det >= 0.0, x, "det >= 0 in the definite algebras");
    }

    const Multivector z = random_mv(sig, rng);
    c.expect(max_abs_diff(gp(gp(x, y), z), gp(x, gp(y, z))),
             c.opt.tol * (1.0 + std::pow(coeff_scale(x), 3)), x,
             "gp associates");

    if (std::abs(nr.det) >= 1e-2) {
      c.expect(max_abs_diff(gp(x, inverse(x)), scalar_mv(sig, 1.0)),
               c.opt.tol, x, "x * inv(x) = 1");
    }
  }
}

void suite_product(Ctx& c) {
  const Signature& sig = c.opt.sig;
  Rng rng = substream(c.opt.seed, 300);
  const auto& sectors = reachable_sectors(sig);

  for (std::size_t i = 0; i < c.opt.samples; ++i) {
    // Structural product of exponentials. Unit-box coefficients: the
    // comparison is against an absolute bound and hyperbolic factors grow
    // like cosh|A'| * e^(a0).
    const Multivector a = random_mv(sig, rng, -1, 1);
    const Multivector b = random_mv(sig, rng, -1, 1);
    c.expect(max_abs_diff(exp_product(a, b), gp(exp(a), exp(b))), c.opt.tol,
             a, "exp_product = gp(exp, exp)");

    // Commuting exponents: y = alpha + beta*x always commutes with x.
    const Multivector x = random_mv(sig, rng, -1, 1);
    const Multivector y =
        scalar_mv(sig, rng.uniform(-1, 1)) + rng.uniform(-1, 1) * x;
    c.expect(max_abs_diff(gp(x, y), gp(y, x)), 1e-12, x, "constructed pair commutes");
    c.expect(max_abs_diff(exp(x + y), gp(exp(x), exp(y))), 10.0 * c.opt.tol,
             x, "exp(x+y) = exp(x) exp(y) for commuting x, y");

    // Parallel vector exponents add angles.
    const double al = rng.uniform(-3, 3), be = rng.uniform(-3, 3);
    const Multivector u = sig.dim() == 1 ? Multivector{sig, 0, 1, 0, 0}
                                         : Multivector{sig, 0, 0, 0, 1};
    c.expect(max_abs_diff(gp(exp(al * u), exp(be * u)), exp((al + be) * u)),
             c.opt.tol, al * u, "exponent angles add along one axis");

    // det is multiplicative (relative bound).
    const Multivector p = random_mv(sig, rng);
    const Multivector q = random_mv(sig, rng);
    const double dp = norms(p).det, dq = norms(q).det;
    c.expect(std::abs(norms(gp(p, q)).det - dp * dq) /
                 (1.0 + std::abs(dp * dq)),
             c.opt.tol, p, "det(pq) = det(p) det(q)");

    // exp(-log x) inverts x on the finite sectors; skip ill-conditioned
    // det so the absolute bound is meaningful.
    const Multivector w =
        sample_sector(sig, sectors[i % sectors.size()], rng);
    const LogResult lr = log(w);
    if (lr.principal.has_value() && std::abs(norms(w).det) >= 1e-2) {
      c.count_sector(lr.sector.tag);
      c.expect(max_abs_diff(exp(-*lr.principal), inverse(w)), c.opt.tol, w,
               "exp(-log x) = inv(x)");
    }
  }
}

void suite_sqrt(Ctx& c) {
  const Signature& sig = c.opt.sig;
  Rng rng = substream(c.opt.seed, 400);
  const auto& sectors = reachable_sectors(sig);

  for (std::size_t i = 0; i < c.opt.samples; ++i) {
    const Multivector x = random_mv(sig, rng);
    const SqrtResult sr = sqrt_all(x);
    for (const Multivector& r : sr.isolated) {
      c.expect(max_abs_diff(gp(r, r), x), c.opt.tol, x, "root squares back");
    }

    // Both closed-form pairs are real on this slice: a0 > |B'| with an
    // indefinite or 1D-positive form.
    if (sig.tag == Algebra::cl10) {
      const double b0 = rng.uniform(0.5, 3.0);
      const double b1 = (rng.next() & 1 ? 1 : -1) * rng.uniform(0.05, 0.9 * b0);
      const Multivector h{sig, b0, b1, 0, 0};
      c.expect_true(sqrt_all(h).isolated.size() == 4, h,
                    "four roots right of the cone");
    }
    if (sig.tag == Algebra::cl11 || sig.tag == Algebra::cl20) {
      Multivector v{sig, 0, rng.uniform(-3, 3), rng.uniform(-3, 3),
                    rng.uniform(-3, 3)};
      const double q = norms(v).qsq;
      if (q > 0.1) {
        const Multivector h =
            scalar_mv(sig, std::sqrt(q) * (1.0 + rng.uniform(0.05, 1.0))) + v;
        c.expect_true(sqrt_all(h).isolated.size() == 4, h,
                      "four roots when a0 > sqrt(det) > 0");
      }
    }

    // exp(log/2) lands on (one of) the closed-form roots.
    const Multivector w =
        sample_sector(sig, sectors[i % sectors.size()], rng);
    const LogResult lr = log(w);
    if (lr.principal.has_value()) {
      const auto [r1, r2] = sqrt_explog(w);
      c.expect(max_abs_diff(gp(r1, r1), w), c.opt.tol, w,
               "explog root squares back");
      const SqrtResult all = sqrt_all(w);
      double best = 1e300;
      for (const Multivector& r : all.isolated) {
        best = std::min({best, max_abs_diff(r, r1), max_abs_diff(r, r2)});
      }
      c.expect(best, 10.0 * c.opt.tol, w, "explog root is in the isolated set");
    }
  }

  // Scalar root families, unit and scaled.
  Rng frng = substream(c.opt.seed, 401);
  for (const double lam :
       {1.0, -1.0, frng.uniform(0.1, 9.0), -frng.uniform(0.1, 9.0)}) {
    const Multivector x = scalar_mv(sig, lam);
    const SqrtResult sr = sqrt_all(x);
    for (const Multivector& r : sr.isolated) {
      c.expect(max_abs_diff(gp(r, r), x), c.opt.tol, x,
               "scalar root squares back");
    }
    for (const RootFamily& fam : sr.families) {
      for (int n = 0; n < 100; ++n) {
        double c1 = frng.uniform(-2, 2), c2 = frng.uniform(-2, 2);
        if (!fam.in_domain(c1, c2)) {
          --n;  // redraw; every family has nonempty domain
          continue;
        }
        const Multivector m =
            fam.at(c1, c2, frng.next() & 1 ? +1 : -1, frng.next() & 1 ? +1 : -1);
        c.expect(max_abs_diff(gp(m, m), x), c.opt.tol, x,
                 "family member squares back");
      }
    }
  }

  // Light-cone points still have closed-form roots.
  if (sig.tag != Algebra::cl01 && sig.tag != Algebra::cl02) {
    Rng lrng = substream(c.opt.seed, 402);
    for (int n = 0; n < 50; ++n) {
      const Multivector x = sample_sector(sig, SectorTag::light_cone, lrng);
      const SqrtResult sr = sqrt_all(x);
      c.expect_true(sr.isolated.size() >= 2, x, "cone point has roots");
      for (const Multivector& r : sr.isolated) {
        c.expect(max_abs_diff(gp(r, r), x), c.opt.tol, x,
                 "cone root squares back");
      }
    }
  }
}

void suite_series(Ctx& c) {
  const Signature& sig = c.opt.sig;
  Rng rng = substream(c.opt.seed, 500);
  const double exp_tol = c.opt.tol * 1e-2;  // 1e-12 at the default 1e-10

  for (std::size_t i = 0; i < c.opt.samples; ++i) {
    const Multivector x = random_mv(sig, rng, -1, 1);
    c.expect(max_abs_diff(exp_series(x, {30}), exp(x)), exp_tol, x,
             "30-term series matches closed exp");

    const double e10 = max_abs_diff(exp_series(x, {10}), exp(x));
    const double e30 = max_abs_diff(exp_series(x, {30}), exp(x));
    c.expect_true(e30 <= e10 + 1e-15, x, "truncation error shrinks");

    // Small step off 1 keeps both eigenvalues of x-1 inside the disk.
    Multivector step = random_mv(sig, rng, -0.2, 0.2);
    const double mag = norms(step).seminorm_b;
    if (mag > 1e-8 && mag <= 0.3) {
      const Multivector z = scalar_mv(sig, 1.0) + step;
      const LogResult lr = log(z);
      c.expect(max_abs_diff(log_series(z, {60}), *lr.principal), c.opt.tol,
               z, "60-term series matches closed log");
      c.expect(max_abs_diff(exp_series(log_series(z, {40}), {40}), z),
               c.opt.tol, z, "series round trip");
    }
  }
}

}  // namespace

const std::vector<std::string_view>& check_suite_names() {
  static const std::vector<std::string_view> names{
      "roundtrip", "involution", "product", "sqrt", "series"};
  return names;
}

CheckReport run_check(std::string_view suite, const CheckOptions& opt) {
  Ctx c{CheckReport{std::string(suite), std::string(to_string(opt.sig.tag)),
                    true, 0, 0.0, {}, {}},
        opt};
  if (suite == "roundtrip") {
    suite_roundtrip(c);
  } else if (suite == "involution") {
    suite_involution(c);
  } else if (suite == "product") {
    suite_product(c);
  } else if (suite == "sqrt") {
    suite_sqrt(c);
  } else if (suite == "series") {
    suite_series(c);
  } else {
    throw error(errc::domain_violation,
                "unknown check suite '" + std::string(suite) + "'");
  }
  return c.rep;
}

}  // namespace ga
