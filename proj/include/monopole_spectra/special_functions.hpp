#pragma once

#include <functional>

#include "monopole_spectra/errors.hpp"

namespace monopole {

/// Value of a truncated series together with a rigorous bound on the
/// truncation error and the number of explicitly summed terms.
struct SeriesValue {
  double value = 0.0;
  double error_bound = 0.0;
  long terms_used = 0;
};

/// Monopole self-energy series
///
///   S(alpha) = sum_{l=0}^{inf} [ (2l+1)/sqrt(4l(l+1) + alpha^2) - 1 ]
///
/// Terms decay only as 1/l^2, so the series is summed explicitly up to an
/// adaptively chosen cutoff L and closed with the analytic tail of the
/// asymptotic form (1-alpha^2)/(2(2l+1)^2); the reported error_bound covers
/// the neglected higher orders of that expansion and holds rigorously.
///
/// Requires 0 < alpha <= 1, tolerance > 0, max_terms >= 10. Throws
/// ToleranceNotReachedError when max_terms is exhausted first.
SeriesValue monopole_series_S(double alpha, double tolerance, long max_terms = 2'000'000);

/// Terminating confluent hypergeometric polynomial 1F1(-n, b; x),
/// n >= 0, evaluated by term-by-term accumulation of the defining series.
/// b must not be a non-positive integer.
double hyp1f1_terminating(int n, double b, double x);

/// Terminating Gauss hypergeometric polynomial 2F1(-n, b, c; y) for
/// 0 <= y <= 1, evaluated through the coefficient recurrence
///   a_{p+1} = [(p)(p + eta1 + eta2) + eta1*eta2] / [(p+1)(p + c)] * a_p
/// with eta1 = -n, eta2 = b, stopping at degree n.
/// c must not be a non-positive integer.
double hyp2f1_terminating(int n, double b, double c, double y);

/// Adaptive composite Simpson quadrature of f over [r_min, r_max] with
/// estimated relative error <= rel_tol. Throws NonConvergenceError when the
/// bisection depth limit is reached before the local error test passes.
double integrate_radial(const std::function<double(double)>& f, double r_min,
                        double r_max, double rel_tol);

}  // namespace monopole
