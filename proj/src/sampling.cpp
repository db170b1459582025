#include "ga/sampling.hpp"

#include <cmath>

namespace ga {

Rng substream(std::uint64_t seed, std::uint64_t stream) {
  // One splitmix step over the stream index decorrelates the substreams.
  Rng mix(stream * 0x9E3779B97F4A7C15ull + 0x853C49E6748FEA9Bull);
  return Rng(seed ^ mix.next());
}

Multivector random_mv(const Signature& sig, Rng& rng, double lo, double hi) {
  if (sig.dim() == 1) {
    return Multivector{sig, rng.uniform(lo, hi), rng.uniform(lo, hi), 0, 0};
  }
  return Multivector{sig, rng.uniform(lo, hi), rng.uniform(lo, hi),
                     rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

const std::vector<SectorTag>& reachable_sectors(const Signature& sig) {
  static const std::vector<SectorTag> cl01_s{SectorTag::trig_sector};
  static const std::vector<SectorTag> cl10_s{SectorTag::hyperbolic_sector,
                                             SectorTag::light_cone,
                                             SectorTag::no_solution};
  static const std::vector<SectorTag> cl02_s{
      SectorTag::trig_sector, SectorTag::positive_scalar_axis,
      SectorTag::negative_scalar_axis};
  static const std::vector<SectorTag> hyp2d{
      SectorTag::trig_sector,          SectorTag::hyperbolic_sector,
      SectorTag::null_qvector,         SectorTag::light_cone,
      SectorTag::positive_scalar_axis, SectorTag::negative_scalar_axis,
      SectorTag::no_solution};
  switch (sig.tag) {
    case Algebra::cl01: return cl01_s;
    case Algebra::cl10: return cl10_s;
    case Algebra::cl02: return cl02_s;
    default: return hyp2d;
  }
}

namespace {

// Quaternionic vector with qsq of the requested sign, coefficients in
// [-3,3]; rejection, so only for signs the algebra can produce.
Multivector random_qvec_signed(const Signature& sig, Rng& rng, int sign) {
  for (int tries = 0; tries < 100000; ++tries) {
    Multivector v{sig, 0, rng.uniform(-3, 3),
                  sig.dim() == 1 ? 0 : rng.uniform(-3, 3),
                  sig.dim() == 1 ? 0 : rng.uniform(-3, 3)};
    const double q = norms(v).qsq;
    if (sign > 0 ? q > 0.1 : q < -0.1) return v;
  }
  throw error(errc::domain_violation, "qvec sign unreachable in this algebra");
}

}  // namespace

Multivector sample_sector(const Signature& sig, SectorTag tag, Rng& rng) {
  switch (tag) {
    case SectorTag::positive_scalar_axis:
      return scalar_mv(sig, rng.uniform(0.01, 3.0));
    case SectorTag::negative_scalar_axis:
      return scalar_mv(sig, -rng.uniform(0.01, 3.0));

    case SectorTag::light_cone: {
      if (sig.tag == Algebra::cl10) {
        const double b = rng.uniform(0.01, 3.0);
        return Multivector{sig, b, b, 0, 0};
      }
      const Multivector v = random_qvec_signed(sig, rng, +1);
      return scalar_mv(sig, std::sqrt(norms(v).qsq)) + v;
    }

    case SectorTag::null_qvector: {
      // Two free vector coefficients, the third balances qsq to zero.
      for (int tries = 0; tries < 100000; ++tries) {
        const double u = rng.uniform(-3, 3), w = rng.uniform(-3, 3);
        const double bal = std::sqrt(u * u + w * w);
        if (bal < 0.05) continue;
        const double sgn = rng.next() & 1 ? 1.0 : -1.0;
        const double b0 = rng.uniform(0.01, 3.0);
        if (sig.tag == Algebra::cl20) {
          return Multivector{sig, b0, u, w, sgn * bal};  // b12^2 = b1^2+b2^2
        }
        if (sig.tag == Algebra::cl11) {
          return Multivector{sig, b0, u, sgn * bal, w};  // b2^2 = b1^2+b12^2
        }
        break;
      }
      throw error(errc::domain_violation, "null qvec unreachable");
    }

    default: {
      // Rejection with an interior margin: near qsq = 0 the winding axis
      // norm blows up, near det = 0 the hyperbolic angle does, and both
      // amplify coefficient rounding past the roundtrip tolerances. The
      // boundaries themselves are the light-cone and null sectors, sampled
      // by their own constructions above.
      for (int tries = 0; tries < 1000000; ++tries) {
        const Multivector x = random_mv(sig, rng);
        const SectorClass sc = classify_log(x);
        if (sc.tag != tag) continue;
        if (tag == SectorTag::trig_sector ||
            tag == SectorTag::hyperbolic_sector) {
          const double s = coeff_scale(x);
          const double margin = 5e-2 * (1.0 + s * s);
          if (std::abs(sc.norms.qsq) < margin) continue;
          if (tag == SectorTag::hyperbolic_sector && sc.norms.det < margin)
            continue;
        }
        return x;
      }
      throw error(errc::domain_violation, "sector not reachable by sampling");
    }
  }
}

}  // namespace ga
