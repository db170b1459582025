#pragma once

// Deterministic sampling used by the check suites and the bench harness.
// The generator is self-contained (splitmix64) so streams are reproducible
// across standard libraries and platforms for a given seed.

#include <cstdint>
#include <vector>

#include "ga/core.hpp"
#include "ga/functions.hpp"

namespace ga {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  long pick(long lo, long hi) {  // inclusive ends
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

// Independent substream: hashes the stream index into the seed.
Rng substream(std::uint64_t seed, std::uint64_t stream);

// Uniform coefficients in [lo, hi); one-dimensional algebras draw only
// (a0, a1).
Multivector random_mv(const Signature& sig, Rng& rng, double lo = -3.0,
                      double hi = 3.0);

// Sectors that classify_log can actually report for this algebra,
// excluding zero_mv.
const std::vector<SectorTag>& reachable_sectors(const Signature& sig);

// Draws from one sector: rejection sampling from [-3,3] coefficients for
// the open sectors, direct construction for the measure-zero ones
// (light_cone, null_qvector, the scalar axes).
Multivector sample_sector(const Signature& sig, SectorTag tag, Rng& rng);

}  // namespace ga
