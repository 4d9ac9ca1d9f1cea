#pragma once

#include <string>
#include <vector>

#include "monopole_spectra/model.hpp"

namespace monopole {

enum class PotentialKind { kratzer, screened };

/// One bound level: quantum numbers, energy (< 0 always) and the
/// normalization constant of the reduced radial function.
struct BoundState {
  QuantumNumbers quantum;
  PotentialKind kind = PotentialKind::kratzer;
  double energy = 0.0;
  double normalization = 0.0;
};

/// Effective potential of the radial equation for the unscreened model,
///   V(r) = [hbar^2 l(l+1)/(2M) + D A^2] / r^2 + (K - 2 D A) / r.
double effective_potential_kratzer(double r, const ModelParams& params, int l);

/// Screened effective potential,
///   V(r) = hbar^2 l(l+1)/(2M r^2)
///          - 2D (A e^{-delta r}/r - A^2 e^{-2 delta r}/(2 r^2))
///          + K e^{-delta r}/r.
/// Coincides pointwise with the Kratzer form at delta = 0.
double effective_potential_screened(double r, const ModelParams& params, int l);

struct PotentialMinimum {
  double r_star;
  double v_star;
};

/// Bracketed golden-section minimization of the chosen effective potential,
/// to relative 1e-10 in r_star. Throws NoMinimumError when the potential is
/// monotone on the search bracket (e.g. Kratzer with zeta >= 0).
PotentialMinimum potential_minimum(const ModelParams& params, int l, PotentialKind kind);

/// Closed-form Kratzer level
///   E_{nl} = -(alpha^2 hbar^2 / 2M) zeta^2 / (n + ell)^2.
/// Requires zeta < 0; throws NoBoundStateError otherwise (zeta = 0 is the
/// threshold, not a zero-energy state).
double energy_kratzer(const ModelParams& params, int n, int l);

/// Closed-form screened level
///   E_{nl} = -(hbar^2 alpha^2 delta^2 / 2M)
///            (lambdaK_sq - eta_sq - (d+n)^2)^2 / (d+n)^2,
/// valid while the numerator is positive (k_b' > 0). Requires delta > 0;
/// throws InadmissibleStateError when the state fails the inequality.
double energy_screened(const ModelParams& params, int n, int l);

/// Largest admissible radial number n < sqrt(lambdaK_sq - eta_sq) - d for the
/// screened spectrum, or nullopt when the bound is <= 0 (no bound states).
/// Requires delta > 0.
std::optional<int> max_radial_quantum_number(const ModelParams& params, int l);

/// Normalized reduced radial wavefunction of a single bound level.
/// Construction quantizes the state and fixes the constant by
/// int_0^inf |psi|^2 dr = 1; evaluation is then a pure function of r.
class RadialWavefunction {
 public:
  static RadialWavefunction kratzer(const ModelParams& params, int n, int l);
  static RadialWavefunction screened(const ModelParams& params, int n, int l);

  double operator()(double r) const;
  const BoundState& state() const { return state_; }

  /// Decay rate of the exponential envelope (K_b resp. k_b).
  double decay_rate() const { return k_b_; }

 private:
  RadialWavefunction() = default;

  BoundState state_;
  double k_b_ = 0.0;      // exponential decay rate
  double exponent_ = 0.0; // power-law exponent at the origin (ell resp. d)
  double series_b_ = 0.0; // second hypergeometric parameter (2 ell resp. eta_2)
  double series_c_ = 0.0; // third parameter of 2F1 (2 d), unused for 1F1
  double delta_ = 0.0;
};

/// Single-point conveniences for the two families.
double wavefunction_kratzer(double r, const ModelParams& params, int n, int l);
double wavefunction_screened(double r, const ModelParams& params, int n, int l);

/// Precomputes all couplings once and returns a fast closure of r, pointwise
/// equal to the matching effective_potential_* operation. Intended for grid
/// and quadrature consumers.
std::function<double(double)> make_effective_potential(const ModelParams& params, int l,
                                                       PotentialKind kind);

struct SpectrumRow {
  int n;
  int l;
  double energy;
};

/// Enumerated spectrum over (n, l), rows sorted by (l, n), energies < 0.
/// States that fail their admissibility checks are omitted and reported in
/// the warning list.
struct SpectrumTable {
  ModelParams params;
  PotentialKind kind = PotentialKind::kratzer;
  std::vector<SpectrumRow> rows;
  std::vector<std::string> warnings;
};

SpectrumTable build_spectrum_table(const ModelParams& params, PotentialKind kind,
                                   int l_max, int per_l_n_max);

}  // namespace monopole
