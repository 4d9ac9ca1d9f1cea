#include "monopole_spectra/special_functions.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

namespace monopole {

namespace {

std::string fmt_msg(const char* fmt, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

// Single series term, cancellation-free:
//   t_l = (2l+1)/sqrt(4l(l+1)+alpha^2) - 1 = x / (s (1+s)),
// with x = (1-alpha^2)/(2l+1)^2 and s = sqrt(1-x).
double series_term(double one_minus_a2, long l) {
  const double w = 2.0 * static_cast<double>(l) + 1.0;
  const double x = one_minus_a2 / (w * w);
  const double s = std::sqrt(1.0 - x);
  return x / (s * (1.0 + s));
}

bool is_nonpositive_integer(double v) {
  return v <= 0.0 && v == std::floor(v);
}

}  // namespace

SeriesValue monopole_series_S(double alpha, double tolerance, long max_terms) {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw InvalidParameterError(fmt_msg("monopole_series_S: alpha must lie in (0,1], got %g", alpha));
  }
  if (!(tolerance > 0.0)) {
    throw InvalidParameterError(fmt_msg("monopole_series_S: tolerance must be > 0, got %g", tolerance));
  }
  if (max_terms < 10) {
    throw InvalidParameterError(fmt_msg("monopole_series_S: max_terms must be >= 10, got %g",
                                        static_cast<double>(max_terms)));
  }

  const double u = (1.0 - alpha) * (1.0 + alpha);  // 1 - alpha^2
  constexpr double sum2_full = std::numbers::pi * std::numbers::pi / 8.0;          // sum 1/(2l+1)^2
  constexpr double sum4_full = std::numbers::pi * std::numbers::pi *
                               std::numbers::pi * std::numbers::pi / 96.0;         // sum 1/(2l+1)^4

  double partial = 0.0;   // sum of explicit terms t_l, l <= L
  double partial2 = 0.0;  // sum of 1/(2l+1)^2,     l <= L
  double partial4 = 0.0;  // sum of 1/(2l+1)^4,     l <= L

  // For l >= 1 the expansion variable x = u/(2l+1)^2 is <= 1/9, so the
  // remainder beyond the first-order tail is bounded by (27/64) x^2 per term.
  constexpr double remainder_coeff = 27.0 / 64.0;

  long l = 0;
  long checkpoint = 32;
  while (true) {
    for (; l < checkpoint; ++l) {
      const double w = 2.0 * static_cast<double>(l) + 1.0;
      partial += series_term(u, l);
      const double inv2 = 1.0 / (w * w);
      partial2 += inv2;
      partial4 += inv2 * inv2;
    }
    const double tail4 = std::max(sum4_full - partial4, 0.0);
    const double bound = remainder_coeff * u * u * tail4;
    if (bound <= tolerance || u == 0.0) {
      const double tail2 = std::max(sum2_full - partial2, 0.0);
      return SeriesValue{partial + 0.5 * u * tail2, bound, l};
    }
    if (checkpoint >= max_terms) {
      throw ToleranceNotReachedError(
          fmt_msg("monopole_series_S: error bound %g still above tolerance %g at max_terms", bound, tolerance));
    }
    checkpoint = std::min(max_terms, checkpoint * 2);
  }
}

double hyp1f1_terminating(int n, double b, double x) {
  if (n < 0) {
    throw InvalidParameterError(fmt_msg("hyp1f1_terminating: degree must be >= 0, got %g",
                                        static_cast<double>(n)));
  }
  if (is_nonpositive_integer(b)) {
    throw InvalidParameterError(fmt_msg("hyp1f1_terminating: b = %g is a non-positive integer", b));
  }
  double term = 1.0;
  double sum = 1.0;
  for (int p = 0; p < n; ++p) {
    term *= (static_cast<double>(p) - n) * x / ((b + p) * (p + 1.0));
    sum += term;
  }
  return sum;
}

double hyp2f1_terminating(int n, double b, double c, double y) {
  if (n < 0) {
    throw InvalidParameterError(fmt_msg("hyp2f1_terminating: degree must be >= 0, got %g",
                                        static_cast<double>(n)));
  }
  if (is_nonpositive_integer(c)) {
    throw InvalidParameterError(fmt_msg("hyp2f1_terminating: c = %g is a non-positive integer", c));
  }
  if (!(y >= 0.0 && y <= 1.0)) {
    throw InvalidParameterError(fmt_msg("hyp2f1_terminating: y must lie in [0,1], got %g", y));
  }
  const double eta1 = -static_cast<double>(n);
  const double eta2 = b;
  double a_p = 1.0;
  double sum = 1.0;
  double y_pow = 1.0;
  for (int p = 0; p < n; ++p) {
    const double pd = static_cast<double>(p);
    a_p *= (pd * (pd + eta1 + eta2) + eta1 * eta2) / ((pd + 1.0) * (pd + c));
    y_pow *= y;
    sum += a_p * y_pow;
  }
  return sum;
}

namespace {

struct SimpsonWorker {
  const std::function<double(double)>& f;
  int max_depth;

  double recurse(double a, double m, double b, double fa, double fm, double fb,
                 double whole, double eps, int depth) const {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double h12 = (b - a) / 12.0;
    const double left = h12 * (fa + 4.0 * flm + fm);
    const double right = h12 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * eps) {
      return left + right + delta / 15.0;
    }
    if (depth >= max_depth) {
      throw NonConvergenceError("integrate_radial: refinement limit reached before tolerance");
    }
    return recurse(a, lm, m, fa, flm, fm, left, 0.5 * eps, depth + 1) +
           recurse(m, rm, b, fm, frm, fb, right, 0.5 * eps, depth + 1);
  }
};

}  // namespace

double integrate_radial(const std::function<double(double)>& f, double r_min,
                        double r_max, double rel_tol) {
  if (!(r_min < r_max)) {
    throw InvalidParameterError(fmt_msg("integrate_radial: need r_min < r_max, got [%g, %g]", r_min, r_max));
  }
  if (!(rel_tol > 0.0)) {
    throw InvalidParameterError(fmt_msg("integrate_radial: rel_tol must be > 0, got %g", rel_tol));
  }

  // Coarse composite pass to fix the absolute tolerance scale.
  constexpr int kCoarse = 64;
  const double h = (r_max - r_min) / kCoarse;
  double coarse = f(r_min) + f(r_max);
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < kCoarse; ++i) {
    const double v = f(r_min + i * h);
    (i % 2 ? odd : even) += v;
  }
  coarse = (coarse + 4.0 * odd + 2.0 * even) * h / 3.0;
  const double scale = std::max(std::abs(coarse), std::numeric_limits<double>::min());

  SimpsonWorker worker{f, 48};
  const double m = 0.5 * (r_min + r_max);
  const double fa = f(r_min), fm = f(m), fb = f(r_max);
  const double whole = (r_max - r_min) / 6.0 * (fa + 4.0 * fm + fb);
  return worker.recurse(r_min, m, r_max, fa, fm, fb, whole, rel_tol * scale, 0);
}

}  // namespace monopole
