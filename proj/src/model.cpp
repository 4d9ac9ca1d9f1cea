#include "monopole_spectra/model.hpp"

#include <cmath>
#include <cstdio>

namespace monopole {

namespace {

[[noreturn]] void fail(const char* fmt, double v) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), fmt, v);
  throw InvalidParameterError(buf);
}

}  // namespace

void ModelParams::validate() const {
  if (!(constants.hbar > 0.0)) fail("hbar must be > 0, got %g", constants.hbar);
  if (!(constants.mass > 0.0)) fail("mass must be > 0, got %g", constants.mass);
  if (!(constants.charge > 0.0)) fail("charge must be > 0, got %g", constants.charge);
  if (!(geometry.alpha > 0.0) || geometry.alpha > 1.0)
    fail("alpha must lie in (0,1], got %g", geometry.alpha);
  if (!(kratzer.A > 0.0)) fail("Kratzer A must be > 0, got %g", kratzer.A);
  if (!(kratzer.D > 0.0)) fail("Kratzer D must be > 0, got %g", kratzer.D);
  if (!(screening.delta >= 0.0)) fail("screening delta must be >= 0, got %g", screening.delta);
}

DerivedCouplings derive_couplings(const ModelParams& params, int l,
                                  double series_tolerance, long series_max_terms) {
  params.validate();
  if (l < 0) fail("angular number l must be >= 0, got %g", static_cast<double>(l));
  if (!(series_tolerance > 0.0)) fail("series_tolerance must be > 0, got %g", series_tolerance);

  const double hbar = params.constants.hbar;
  const double mass = params.constants.mass;
  const double q = params.constants.charge;
  const double alpha = params.geometry.alpha;
  const double A = params.kratzer.A;
  const double D = params.kratzer.D;
  const double a2h2 = alpha * alpha * hbar * hbar;

  DerivedCouplings c;
  c.S = monopole_series_S(alpha, series_tolerance, series_max_terms);
  c.K = 0.5 * q * q * c.S.value;
  c.zeta = mass * (c.K - 2.0 * A * D) / a2h2;
  c.lambda_sq = static_cast<double>(l) * (l + 1.0) / (alpha * alpha);
  c.lambdaK_sq = 2.0 * mass * D * A * A / a2h2;
  c.j_sq = c.lambda_sq + c.lambdaK_sq;
  c.ell = 0.5 * (1.0 + std::sqrt(4.0 * c.j_sq + 1.0));
  c.d = 0.5 * (1.0 + std::sqrt(4.0 * c.lambda_sq + 4.0 * c.lambdaK_sq + 1.0));
  if (params.screening.delta > 0.0) {
    c.eta_sq = c.zeta / params.screening.delta;
  }
  return c;
}

}  // namespace monopole
