#pragma once

#include <cmath>

#include "monopole_spectra/model.hpp"

namespace test_helpers {

/// Caption-style parameter sets (hbar = M = q = 1).
inline monopole::ModelParams params(double alpha, double A, double D, double delta = 0.0) {
  monopole::ModelParams p;
  p.constants = {1.0, 1.0, 1.0};
  p.geometry.alpha = alpha;
  p.kratzer = {A, D};
  p.screening.delta = delta;
  return p;
}

// Regression constants pinned by the pre-build brute-force oracle
// (1e7-term float64 summation plus Hurwitz-zeta tails, cross-checked against
// a 40-digit evaluation; the two routes agree to 2e-16). See
// tests/oracles/brute_force_s.py.
inline constexpr double kS_half = 1.0909391332379950;       // S(0.5)
inline constexpr double kS_099 = 0.012428513887965376;      // S(0.99)
inline constexpr double kZeta_half = -1.8181217335240100;   // zeta(alpha=.5, A=.5, D=1)
inline constexpr double kE_kratzer_011 = -0.10733500838578401;   // alpha=1,A=.5,D=1,l=1,n=0
inline constexpr double kE_screened_1em2 = -0.09859395746461038; // same, delta=1e-2
inline constexpr double kE_screened_1em3 = -0.10644419938411948; // same, delta=1e-3
inline constexpr double kE_screened_1em4 = -0.10724576044652208; // same, delta=1e-4
inline constexpr double kV_screened_r1 = 2.1158546349490841;     // A=2,D=4,l=2,a=.5,d=.1,r=1
inline constexpr double kV_screened_r25 = -2.7816816725428516;   // same, r=2.5

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace test_helpers
