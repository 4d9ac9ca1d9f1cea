#include "monopole_spectra/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace monopole {

namespace {

[[noreturn]] void fail_invalid(const char* fmt, double v) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), fmt, v);
  throw InvalidParameterError(buf);
}

void require_positive_radius(double r) {
  if (!(r > 0.0)) fail_invalid("effective potential requires r > 0, got %g", r);
}

void require_quantum(int n, int l) {
  if (n < 0) fail_invalid("radial number n must be >= 0, got %g", static_cast<double>(n));
  if (l < 0) fail_invalid("angular number l must be >= 0, got %g", static_cast<double>(l));
}

double self_coupling(const ModelParams& params) {
  const auto S = monopole_series_S(params.geometry.alpha, 1e-12);
  return 0.5 * params.constants.charge * params.constants.charge * S.value;
}

// Quantized decay rate of the screened state: k_b = t / (d + n) with
// t = -zeta + delta (lambdaK_sq - (d+n)^2) = delta * (numerator of k_b').
// Admissible iff t > 0.
struct ScreenedQuantization {
  double t;
  double dn;  // d + n
  DerivedCouplings c;
};

ScreenedQuantization quantize_screened(const ModelParams& params, int n, int l) {
  require_quantum(n, l);
  if (!(params.screening.delta > 0.0)) {
    fail_invalid("screened spectrum requires delta > 0, got %g", params.screening.delta);
  }
  auto c = derive_couplings(params, l, 1e-12);
  const double dn = c.d + n;
  const double t = -c.zeta + params.screening.delta * (c.lambdaK_sq - dn * dn);
  return {t, dn, std::move(c)};
}

}  // namespace

double effective_potential_kratzer(double r, const ModelParams& params, int l) {
  require_positive_radius(r);
  require_quantum(0, l);
  params.validate();
  const double hbar = params.constants.hbar;
  const double mass = params.constants.mass;
  const double A = params.kratzer.A;
  const double D = params.kratzer.D;
  const double K = self_coupling(params);
  const double inv_sq = hbar * hbar * l * (l + 1.0) / (2.0 * mass) + D * A * A;
  return inv_sq / (r * r) + (K - 2.0 * D * A) / r;
}

double effective_potential_screened(double r, const ModelParams& params, int l) {
  require_positive_radius(r);
  require_quantum(0, l);
  params.validate();
  const double hbar = params.constants.hbar;
  const double mass = params.constants.mass;
  const double A = params.kratzer.A;
  const double D = params.kratzer.D;
  const double delta = params.screening.delta;
  const double K = self_coupling(params);
  const double e1 = std::exp(-delta * r);
  const double e2 = e1 * e1;
  return hbar * hbar * l * (l + 1.0) / (2.0 * mass * r * r)
         - 2.0 * D * (A * e1 / r - 0.5 * A * A * e2 / (r * r))
         + K * e1 / r;
}

PotentialMinimum potential_minimum(const ModelParams& params, int l, PotentialKind kind) {
  const auto V = make_effective_potential(params, l, kind);

  // Log-spaced scan for a bracketing triple around the Kratzer length scale.
  const double scale = params.kratzer.A;
  const double lo = 1e-6 * scale;
  const double hi = 1e5 * scale;
  constexpr int kScan = 400;
  const double ratio = std::pow(hi / lo, 1.0 / (kScan - 1));

  double a = 0.0, b = 0.0, c = 0.0;
  double prev2 = V(lo), prev1 = V(lo * ratio);
  double r_prev2 = lo, r_prev1 = lo * ratio;
  bool found = false;
  for (int i = 2; i < kScan; ++i) {
    const double r = lo * std::pow(ratio, i);
    const double v = V(r);
    if (prev1 < prev2 && prev1 < v) {
      a = r_prev2;
      b = r_prev1;
      c = r;
      found = true;
      break;
    }
    prev2 = prev1;
    r_prev2 = r_prev1;
    prev1 = v;
    r_prev1 = r;
  }
  if (!found) {
    throw NoMinimumError("potential_minimum: potential is monotone on the search bracket");
  }

  // Golden-section contraction of [a, c] to relative width 1e-10.
  constexpr double kGolden = 0.6180339887498949;
  double x1 = c - kGolden * (c - a);
  double x2 = a + kGolden * (c - a);
  double f1 = V(x1), f2 = V(x2);
  while (c - a > 1e-10 * b) {
    if (f1 < f2) {
      c = x2;
      x2 = x1;
      f2 = f1;
      x1 = c - kGolden * (c - a);
      f1 = V(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (c - a);
      f2 = V(x2);
    }
    b = 0.5 * (a + c);
  }

  // One parabolic vertex step through the final triple sharpens the flat
  // comparison region near the minimum.
  const double rm = 0.5 * (a + c);
  const double h = std::max(1e-6 * rm, 0.25 * (c - a));
  const double vl = V(rm - h), vc = V(rm), vr = V(rm + h);
  double r_star = rm;
  const double denom = vl - 2.0 * vc + vr;
  if (denom > 0.0) {
    const double shift = 0.5 * h * (vl - vr) / denom;
    if (std::abs(shift) < h) r_star = rm + shift;
  }
  return {r_star, V(r_star)};
}

double energy_kratzer(const ModelParams& params, int n, int l) {
  require_quantum(n, l);
  const auto c = derive_couplings(params, l, 1e-12);
  if (!(c.zeta < 0.0)) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "energy_kratzer: no bound states, zeta = %g is not negative", c.zeta);
    throw NoBoundStateError(buf);
  }
  const double alpha = params.geometry.alpha;
  const double hbar = params.constants.hbar;
  const double mass = params.constants.mass;
  const double denom = (n + c.ell);
  return -(alpha * alpha * hbar * hbar / (2.0 * mass)) * c.zeta * c.zeta / (denom * denom);
}

double energy_screened(const ModelParams& params, int n, int l) {
  const auto q = quantize_screened(params, n, l);
  if (!(q.t > 0.0)) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "energy_screened: state (n=%d, l=%d) is inadmissible, k_b' numerator = %g <= 0",
                  n, l, q.t / params.screening.delta);
    throw InadmissibleStateError(buf);
  }
  const double alpha = params.geometry.alpha;
  const double hbar = params.constants.hbar;
  const double mass = params.constants.mass;
  // -(hbar^2 alpha^2 delta^2 / 2M) N^2/(d+n)^2 written with t = delta*N.
  return -(alpha * alpha * hbar * hbar / (2.0 * mass)) * (q.t / q.dn) * (q.t / q.dn);
}

std::optional<int> max_radial_quantum_number(const ModelParams& params, int l) {
  require_quantum(0, l);
  if (!(params.screening.delta > 0.0)) {
    fail_invalid("max_radial_quantum_number requires delta > 0, got %g", params.screening.delta);
  }
  const auto c = derive_couplings(params, l, 1e-12);
  const double arg = c.lambdaK_sq - *c.eta_sq;
  if (!(arg > 0.0)) return std::nullopt;
  const double bound = std::sqrt(arg) - c.d;  // admissible n satisfy n < bound
  if (!(bound > 0.0)) return std::nullopt;
  const double n_max = std::ceil(bound) - 1.0;  // largest integer strictly below
  if (n_max < 0.0) return std::nullopt;
  return static_cast<int>(n_max);
}

namespace {

double kratzer_unnormalized(double r, double k_b, double ell, int n) {
  const double rho = 2.0 * k_b * r;
  if (rho == 0.0) return 0.0;
  return std::pow(rho, ell) * std::exp(-0.5 * rho) * hyp1f1_terminating(n, 2.0 * ell, rho);
}

double screened_unnormalized(double r, double k_b, double d, double eta2,
                             double delta, int n) {
  const double y = -std::expm1(-2.0 * delta * r);
  if (y == 0.0) return 0.0;
  return std::pow(y, d) * std::exp(-k_b * r) * hyp2f1_terminating(n, eta2, 2.0 * d, y);
}

}  // namespace

RadialWavefunction RadialWavefunction::kratzer(const ModelParams& params, int n, int l) {
  RadialWavefunction w;
  const double E = energy_kratzer(params, n, l);
  const auto c = derive_couplings(params, l, 1e-12);
  const double a2h2 = params.geometry.alpha * params.geometry.alpha *
                      params.constants.hbar * params.constants.hbar;
  w.k_b_ = std::sqrt(-2.0 * params.constants.mass * E / a2h2);
  w.exponent_ = c.ell;
  w.series_b_ = 2.0 * c.ell;
  w.state_ = BoundState{{n, l}, PotentialKind::kratzer, E, 0.0};

  const double r_up = (3.0 * (c.ell + n) + 60.0) / w.k_b_;
  const double norm_sq = integrate_radial(
      [&](double r) {
        const double v = kratzer_unnormalized(r, w.k_b_, w.exponent_, n);
        return v * v;
      },
      0.0, r_up, 1e-10);
  w.state_.normalization = 1.0 / std::sqrt(norm_sq);
  return w;
}

RadialWavefunction RadialWavefunction::screened(const ModelParams& params, int n, int l) {
  RadialWavefunction w;
  const double E = energy_screened(params, n, l);
  const auto q = quantize_screened(params, n, l);
  const double delta = params.screening.delta;
  const double k_b = q.t / q.dn;
  const double k_b_prime = k_b / (2.0 * delta);
  // eta_2 recomputed from the quantized k_b'; analytically 2(d + k_b') + n.
  const double eta2 = q.c.d + k_b_prime +
                      std::sqrt(k_b_prime * k_b_prime + q.c.lambdaK_sq - *q.c.eta_sq);

  w.k_b_ = k_b;
  w.exponent_ = q.c.d;
  w.series_b_ = eta2;
  w.series_c_ = 2.0 * q.c.d;
  w.delta_ = delta;
  w.state_ = BoundState{{n, l}, PotentialKind::screened, E, 0.0};

  const double r_up = (3.0 * (q.c.d + n) + 60.0) / k_b;
  const double norm_sq = integrate_radial(
      [&](double r) {
        const double v = screened_unnormalized(r, k_b, q.c.d, eta2, delta, n);
        return v * v;
      },
      0.0, r_up, 1e-10);
  w.state_.normalization = 1.0 / std::sqrt(norm_sq);
  return w;
}

double RadialWavefunction::operator()(double r) const {
  if (r < 0.0) fail_invalid("wavefunction requires r >= 0, got %g", r);
  const int n = state_.quantum.n;
  const double raw = state_.kind == PotentialKind::kratzer
                         ? kratzer_unnormalized(r, k_b_, exponent_, n)
                         : screened_unnormalized(r, k_b_, exponent_, series_b_, delta_, n);
  return state_.normalization * raw;
}

double wavefunction_kratzer(double r, const ModelParams& params, int n, int l) {
  return RadialWavefunction::kratzer(params, n, l)(r);
}

std::function<double(double)> make_effective_potential(const ModelParams& params, int l,
                                                       PotentialKind kind) {
  params.validate();
  require_quantum(0, l);
  const double hbar = params.constants.hbar;
  const double mass = params.constants.mass;
  const double A = params.kratzer.A;
  const double D = params.kratzer.D;
  const double K = self_coupling(params);
  const double centrifugal = hbar * hbar * l * (l + 1.0) / (2.0 * mass);
  if (kind == PotentialKind::kratzer) {
    const double b = centrifugal + D * A * A;
    const double c = K - 2.0 * D * A;
    return [b, c](double r) { return b / (r * r) + c / r; };
  }
  const double delta = params.screening.delta;
  return [=](double r) {
    const double e1 = std::exp(-delta * r);
    const double e2 = e1 * e1;
    return centrifugal / (r * r) - 2.0 * D * (A * e1 / r - 0.5 * A * A * e2 / (r * r)) +
           K * e1 / r;
  };
}

double wavefunction_screened(double r, const ModelParams& params, int n, int l) {
  return RadialWavefunction::screened(params, n, l)(r);
}

SpectrumTable build_spectrum_table(const ModelParams& params, PotentialKind kind,
                                   int l_max, int per_l_n_max) {
  params.validate();
  if (l_max < 0 || per_l_n_max < 0) {
    fail_invalid("build_spectrum_table: l_max and per_l_n_max must be >= 0 (got %g)",
                 static_cast<double>(std::min(l_max, per_l_n_max)));
  }
  SpectrumTable table;
  table.params = params;
  table.kind = kind;
  char buf[160];
  for (int l = 0; l <= l_max; ++l) {
    int n_hi = per_l_n_max;
    if (kind == PotentialKind::screened) {
      const auto adm = max_radial_quantum_number(params, l);
      if (!adm) {
        std::snprintf(buf, sizeof(buf), "l=%d: no admissible screened states", l);
        table.warnings.emplace_back(buf);
        continue;
      }
      n_hi = std::min(n_hi, *adm);
    }
    for (int n = 0; n <= n_hi; ++n) {
      try {
        const double E = kind == PotentialKind::kratzer ? energy_kratzer(params, n, l)
                                                        : energy_screened(params, n, l);
        table.rows.push_back({n, l, E});
      } catch (const SpectraError& err) {
        std::snprintf(buf, sizeof(buf), "state (n=%d, l=%d) omitted: %s", n, l, err.what());
        table.warnings.emplace_back(buf);
      }
    }
  }
  return table;
}

}  // namespace monopole
