#pragma once

#include <functional>
#include <span>
#include <vector>

#include "monopole_spectra/spectra.hpp"

namespace monopole {

/// Uniform radial grid including both endpoints; Dirichlet data lives on the
/// endpoints, unknowns on the interior points.
struct RadialGrid {
  double r_min = 1e-4;
  double r_max = 50.0;
  int points = 40000;

  double spacing() const { return (r_max - r_min) / (points - 1); }
  void validate() const;  // 0 < r_min < r_max, points >= 100
};

/// Eigenpairs of the discretized radial operator. Vectors are full grid
/// functions (zeros at both endpoints) with unit discrete L2 norm
/// h * sum psi_i^2 = 1.
struct EigenResult {
  RadialGrid grid;
  std::vector<double> energies;              // strictly ascending
  std::vector<std::vector<double>> vectors;  // one per energy
  std::vector<double> residuals;             // per-state indicators
};

using RadialPotential = std::function<double(double)>;

/// Number of eigenvalues of the discretized operator strictly below
/// `energy` (Sturm sequence count).
int count_states_below(const RadialPotential& potential, const ModelParams& params,
                       const RadialGrid& grid, double energy);

/// Finite-difference eigensolver for
///   -(alpha^2 hbar^2 / 2M) psi'' + V(r) psi = E psi,   psi(r_min)=psi(r_max)=0.
///
/// The three-point stencil gives a symmetric tridiagonal matrix; the k lowest
/// eigenvalues are located by Sturm-sequence bisection (guaranteed
/// bracketing), eigenvectors by inverse iteration. `potential` must already
/// contain the centrifugal term.
///
/// With require_bound set, throws InsufficientBoundStatesError when fewer
/// than k negative eigenvalues exist on the domain.
EigenResult solve_radial(const RadialPotential& potential, const ModelParams& params,
                         const RadialGrid& grid, int k, bool require_bound = false);

struct RefineOptions {
  int initial_points = 4000;
  int max_refinements = 10;
  bool require_bound = true;
  bool richardson = true;   // extrapolate the final grid pair
  double r_min = 0.0;       // 0 = automatic placement
  double r_max = 0.0;       // 0 = automatic (turning-point based)
};

/// Repeatedly doubles the grid density (after extending r_max past the outer
/// classical turning point of the k-th state) until successive eigenvalues
/// change by less than rel_tol, then Richardson-extrapolates the final pair.
/// Residuals report the last successive change per state.
EigenResult refine_until(const RadialPotential& potential, const ModelParams& params,
                         int k, double rel_tol, const RefineOptions& opts = {});

struct GreeneAldrichError {
  double err_r2;  ///< relative error of 4 d^2 e^{-2dr}/(1-e^{-2dr})^2 vs 1/r^2
  double err_r1;  ///< relative error of 2 d e^{-dr}/(1-e^{-2dr}) vs 1/r
};

/// Pointwise relative errors of the two exponential approximants; both scale
/// as (delta*r)^2 for small delta*r and vanish in the delta -> 0 limit.
GreeneAldrichError greene_aldrich_error(double delta, double r);

struct ValidationRow {
  int n;
  int l;
  double e_analytic;
  double e_numeric;
  double abs_err;
  double rel_err;
  bool pass;
};

struct ValidationReport {
  std::vector<ValidationRow> rows;
  double rel_tol = 0.0;
  RadialGrid final_grid;  // grid of the last converged solve
  bool all_pass() const;
};

/// Compares the closed-form spectrum against the finite-difference solver on
/// the *exact* potential of the chosen kind. For Kratzer states the two agree
/// to discretization accuracy; for screened states the gap measures the
/// quality of the exponential approximants and pass/fail is judged against
/// the caller-supplied tolerance. Per-row solver failures are recorded as
/// failed rows, not thrown. `refine` seeds the solver's grid placement.
ValidationReport validate_spectrum(const ModelParams& params,
                                   std::span<const int> l_list,
                                   std::span<const int> n_list,
                                   PotentialKind kind, double rel_tol,
                                   const RefineOptions& refine = {});

}  // namespace monopole
