#include "ga/series.hpp"

namespace ga {

Multivector exp_series(const Multivector& x, const SeriesConfig& cfg) {
  if (cfg.terms < 0) {
    throw error(errc::domain_violation, "exp_series needs terms >= 0");
  }
  // Horner: 1 + x/1*(1 + x/2*(1 + ... (1 + x/terms)))
  Multivector acc = scalar_mv(x.sig, 1.0);
  for (int j = cfg.terms; j >= 1; --j) {
    acc = 1.0 + gp((1.0 / j) * x, acc);
  }
  return acc;
}

Multivector log_series(const Multivector& x, const SeriesConfig& cfg) {
  if (cfg.terms < 1) {
    throw error(errc::domain_violation, "log_series needs terms >= 1");
  }
  const Multivector step = x + (-1.0);
  if (coeff_scale(step) == 0.0) return scalar_mv(x.sig, 0.0);
  const double mag = norms(step).seminorm_b;
  if (!(mag > 0.0) || !(mag < 1.0)) {
    throw error(errc::out_of_convergence_domain,
                "log_series needs 0 < ||x - 1|| < 1");
  }
  // Horner over c_n = (-1)^(n+1)/n: X*(1 + X*(-1/2 + X*(1/3 + ...)))
  Multivector acc = scalar_mv(
      x.sig, (cfg.terms % 2 == 0 ? -1.0 : 1.0) / cfg.terms);
  for (int j = cfg.terms - 1; j >= 1; --j) {
    acc = ((j % 2 == 0 ? -1.0 : 1.0) / j) + gp(step, acc);
  }
  return gp(step, acc);
}

}  // namespace ga
