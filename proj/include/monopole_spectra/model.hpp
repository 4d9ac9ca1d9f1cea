#pragma once

#include <optional>

#include "monopole_spectra/errors.hpp"
#include "monopole_spectra/special_functions.hpp"

namespace monopole {

/// hbar, particle mass and charge, all strictly positive. The unit system is
/// whatever the caller supplies; the canonical presets use hbar = M = q = 1.
struct PhysicalConstants {
  double hbar = 1.0;
  double mass = 1.0;
  double charge = 1.0;
};

/// Solid-angle deficit parameter of the monopole metric. alpha = 1 is the
/// flat-space limit (S(1) = 0, no self-interaction), alpha < 1 the defect.
struct MonopoleGeometry {
  double alpha = 1.0;
};

/// Kratzer well parameters: A (a length) and D (an energy), both positive.
struct KratzerParams {
  double A = 1.0;
  double D = 1.0;
};

/// Exponential screening rate; delta = 0 selects the unscreened model.
struct ScreeningParams {
  double delta = 0.0;
};

struct QuantumNumbers {
  int n = 0;  ///< radial number (node count), n >= 0
  int l = 0;  ///< angular-momentum number, l >= 0
};

/// Full problem definition.
struct ModelParams {
  PhysicalConstants constants;
  MonopoleGeometry geometry;
  KratzerParams kratzer;
  ScreeningParams screening;

  /// Throws InvalidParameterError naming the violated invariant.
  void validate() const;
};

/// Every dimensionless coupling of the two spectra, derived once from
/// (ModelParams, l). Pure value type; all fields are determined by the
/// inputs and repeated derivations are bit-identical.
struct DerivedCouplings {
  SeriesValue S;      ///< self-energy series S(alpha), with truncation bound
  double K;           ///< self-interaction coupling  q^2 S(alpha) / 2
  double zeta;        ///< M (K - 2AD) / (alpha^2 hbar^2); < 0 in the binding regime
  double lambda_sq;   ///< l(l+1) / alpha^2
  double lambdaK_sq;  ///< 2 M D A^2 / (alpha^2 hbar^2)
  double j_sq;        ///< lambda_sq + lambdaK_sq
  double ell;         ///< (1 + sqrt(4 j_sq + 1)) / 2
  double d;           ///< Frobenius exponent (1 + sqrt(4 lambda_sq + 4 lambdaK_sq + 1)) / 2
  std::optional<double> eta_sq;  ///< zeta / delta, present iff delta > 0
};

/// Derives all couplings for angular number l. The series value carries an
/// error bound <= series_tolerance.
DerivedCouplings derive_couplings(const ModelParams& params, int l,
                                  double series_tolerance = 1e-10,
                                  long series_max_terms = 2'000'000);

}  // namespace monopole
