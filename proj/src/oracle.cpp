#include "monopole_spectra/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

namespace monopole {

void RadialGrid::validate() const {
  char buf[128];
  if (!(r_min > 0.0) || !(r_min < r_max)) {
    std::snprintf(buf, sizeof(buf), "RadialGrid requires 0 < r_min < r_max, got [%g, %g]",
                  r_min, r_max);
    throw InvalidParameterError(buf);
  }
  if (points < 100) {
    std::snprintf(buf, sizeof(buf), "RadialGrid requires at least 100 points, got %d", points);
    throw InvalidParameterError(buf);
  }
}

bool ValidationReport::all_pass() const {
  return !rows.empty() &&
         std::all_of(rows.begin(), rows.end(), [](const ValidationRow& r) { return r.pass; });
}

namespace {

// Symmetric tridiagonal discretization of
//   -(alpha^2 hbar^2 / 2M) psi'' + V psi
// on the interior nodes of a uniform grid with Dirichlet endpoints.
struct Tridiag {
  std::vector<double> diag;
  double off = 0.0;  // constant off-diagonal -c/h^2
  double h = 0.0;
};

Tridiag discretize(const RadialPotential& potential, const ModelParams& params,
                   const RadialGrid& grid) {
  grid.validate();
  params.validate();
  const double h = grid.spacing();
  const double c = params.geometry.alpha * params.geometry.alpha * params.constants.hbar *
                   params.constants.hbar / (2.0 * params.constants.mass);
  Tridiag t;
  t.h = h;
  t.off = -c / (h * h);
  t.diag.resize(grid.points - 2);
  for (int i = 0; i < grid.points - 2; ++i) {
    const double v = potential(grid.r_min + (i + 1) * h);
    if (!std::isfinite(v)) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "potential is not finite at r = %g",
                    grid.r_min + (i + 1) * h);
      throw InvalidParameterError(buf);
    }
    t.diag[i] = 2.0 * c / (h * h) + v;
  }
  return t;
}

// Number of eigenvalues strictly below x, from the sign count of the
// LDL^T pivots (Sturm sequence).
int sturm_count(const Tridiag& t, double x) {
  const double off_sq = t.off * t.off;
  const double pivmin =
      std::max(off_sq, 1.0) * std::numeric_limits<double>::min() /
      std::numeric_limits<double>::epsilon();
  int count = 0;
  double q = t.diag[0] - x;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < t.diag.size(); ++i) {
    if (std::abs(q) < pivmin) q = -pivmin;
    q = (t.diag[i] - x) - off_sq / q;
    if (q < 0.0) ++count;
  }
  return count;
}

// Smallest x with sturm_count(x) >= j, bracketed to floating-point
// resolution. Invariant: count(lo) < j <= count(hi).
double bisect_eigenvalue(const Tridiag& t, int j, double lo, double hi) {
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    if (sturm_count(t, mid) >= j) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

// Tridiagonal LU with partial pivoting (dgttrf-style) for (T - lambda I).
struct TridiagLU {
  std::vector<double> dl, d, du, du2;
  std::vector<int> pivoted;

  TridiagLU(const Tridiag& t, double lambda) {
    const int m = static_cast<int>(t.diag.size());
    dl.assign(m, t.off);
    d.resize(m);
    du.assign(m, t.off);
    du2.assign(m, 0.0);
    pivoted.assign(m, 0);
    for (int i = 0; i < m; ++i) d[i] = t.diag[i] - lambda;

    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    for (int i = 0; i + 1 < m; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i + 1])) {
        if (std::abs(d[i]) < tiny) d[i] = tiny;
        const double mult = dl[i + 1] / d[i];
        dl[i + 1] = mult;
        d[i + 1] -= mult * du[i];
        if (i + 2 < m) du2[i] = 0.0;
      } else {
        const double mult = d[i] / dl[i + 1];
        d[i] = dl[i + 1];
        dl[i + 1] = mult;
        const double tmp = d[i + 1];
        d[i + 1] = du[i] - mult * tmp;
        du2[i] = (i + 2 < m) ? du[i + 1] : 0.0;
        du[i] = tmp;
        if (i + 2 < m) du[i + 1] = -mult * du2[i];
        pivoted[i] = 1;
      }
    }
    if (std::abs(d[m - 1]) < tiny) d[m - 1] = tiny;
  }

  void solve(std::vector<double>& b) const {
    const int m = static_cast<int>(d.size());
    for (int i = 0; i + 1 < m; ++i) {
      if (pivoted[i]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= dl[i + 1] * b[i];
    }
    b[m - 1] /= d[m - 1];
    if (m > 1) b[m - 2] = (b[m - 2] - du[m - 2] * b[m - 1]) / d[m - 2];
    for (int i = m - 3; i >= 0; --i) {
      b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
    }
  }
};

void normalize_max(std::vector<double>& v) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  if (peak > 0.0) {
    for (double& x : v) x /= peak;
  }
}

std::vector<double> inverse_iteration(const Tridiag& t, double lambda,
                                      const std::vector<std::vector<double>>& previous,
                                      const std::vector<double>& prev_lambdas) {
  const int m = static_cast<int>(t.diag.size());
  // Perturb the shift slightly off the computed eigenvalue so the factored
  // matrix stays regular.
  const double scale = std::max(std::abs(lambda), std::abs(t.off));
  const double shift = lambda + scale * std::numeric_limits<double>::epsilon();
  const TridiagLU lu(t, shift);

  std::mt19937 rng(0x5eed1234u);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> v(m);
  for (double& x : v) x = uni(rng);
  normalize_max(v);

  const auto orthogonalize = [&] {
    for (std::size_t p = 0; p < previous.size(); ++p) {
      if (std::abs(prev_lambdas[p] - lambda) > 1e-8 * std::max(1.0, std::abs(lambda))) continue;
      double dot = 0.0, nrm = 0.0;
      for (int i = 0; i < m; ++i) {
        dot += v[i] * previous[p][i + 1];
        nrm += previous[p][i + 1] * previous[p][i + 1];
      }
      if (nrm > 0.0) {
        for (int i = 0; i < m; ++i) v[i] -= dot / nrm * previous[p][i + 1];
      }
    }
  };

  for (int iter = 0; iter < 3; ++iter) {
    lu.solve(v);
    orthogonalize();
    normalize_max(v);
  }
  return v;
}

struct Eigenpair {
  double energy;
  std::vector<double> vector;  // full grid function, endpoint zeros
  double residual;
};

std::vector<Eigenpair> lowest_eigenpairs(const Tridiag& t, int k) {
  const int m = static_cast<int>(t.diag.size());
  double lo = t.diag[0], hi = t.diag[0];
  for (double d : t.diag) {
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  lo -= 2.0 * std::abs(t.off) + 1.0;
  hi += 2.0 * std::abs(t.off) + 1.0;

  std::vector<Eigenpair> out;
  std::vector<std::vector<double>> vectors;
  std::vector<double> lambdas;
  double lower = lo;
  for (int j = 1; j <= k; ++j) {
    const double lambda = bisect_eigenvalue(t, j, lower, hi);
    lambdas.push_back(lambda);
    auto interior = inverse_iteration(t, lambda, vectors, lambdas);

    // Canonical sign and unit discrete L2 norm.
    int peak = 0;
    for (int i = 0; i < m; ++i) {
      if (std::abs(interior[i]) > std::abs(interior[peak])) peak = i;
    }
    double norm_sq = 0.0;
    for (double x : interior) norm_sq += x * x;
    double inv = 1.0 / std::sqrt(norm_sq * t.h);
    if (interior[peak] < 0.0) inv = -inv;

    std::vector<double> full(m + 2, 0.0);
    for (int i = 0; i < m; ++i) full[i + 1] = interior[i] * inv;

    // Algebraic residual ||T v - lambda v|| / ||v|| as an eigensolver
    // quality indicator for a single-grid solve.
    double res_sq = 0.0, vec_sq = 0.0;
    for (int i = 0; i < m; ++i) {
      double acc = (t.diag[i] - lambda) * full[i + 1];
      acc += t.off * full[i];      // full[i] is the left neighbor (zero at i=0)
      acc += t.off * full[i + 2];
      res_sq += acc * acc;
      vec_sq += full[i + 1] * full[i + 1];
    }
    out.push_back({lambda, std::move(full), std::sqrt(res_sq / vec_sq)});
    vectors.push_back(out.back().vector);
    lower = std::nextafter(lambda, -std::numeric_limits<double>::infinity());
  }
  return out;
}

}  // namespace

int count_states_below(const RadialPotential& potential, const ModelParams& params,
                       const RadialGrid& grid, double energy) {
  const Tridiag t = discretize(potential, params, grid);
  return sturm_count(t, energy);
}

EigenResult solve_radial(const RadialPotential& potential, const ModelParams& params,
                         const RadialGrid& grid, int k, bool require_bound) {
  if (k < 1) throw InvalidParameterError("solve_radial: k must be >= 1");
  const Tridiag t = discretize(potential, params, grid);
  if (k > static_cast<int>(t.diag.size())) {
    throw InvalidParameterError("solve_radial: k exceeds the number of interior nodes");
  }
  if (require_bound && sturm_count(t, 0.0) < k) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "solve_radial: only %d negative eigenvalue(s) on the domain, %d requested",
                  sturm_count(t, 0.0), k);
    throw InsufficientBoundStatesError(buf);
  }

  EigenResult result;
  result.grid = grid;
  for (auto& pair : lowest_eigenpairs(t, k)) {
    result.energies.push_back(pair.energy);
    result.vectors.push_back(std::move(pair.vector));
    result.residuals.push_back(pair.residual);
  }
  return result;
}

namespace {

// Outermost radius (scanned inward from r_max) where V drops to the level E.
double outer_turning_point(const RadialPotential& potential, double r_min, double r_max,
                           double energy) {
  constexpr int kScan = 2000;
  const double h = (r_max - r_min) / kScan;
  for (int i = 0; i <= kScan; ++i) {
    const double r = r_max - i * h;
    if (r <= r_min) break;
    if (potential(r) <= energy) return r;
  }
  return r_min;
}

}  // namespace

EigenResult refine_until(const RadialPotential& potential, const ModelParams& params,
                         int k, double rel_tol, const RefineOptions& opts) {
  if (!(rel_tol > 0.0)) throw InvalidParameterError("refine_until: rel_tol must be > 0");
  params.validate();

  double r_min = opts.r_min > 0.0 ? opts.r_min : 1e-4 * params.kratzer.A;
  double r_max = opts.r_max > 0.0 ? opts.r_max : 60.0 * std::max(params.kratzer.A, 1.0);

  // Fix the domain first: extend r_max past the outer classical turning point
  // of the k-th state (Dirichlet truncation error decays exponentially there).
  RadialGrid grid{r_min, r_max, opts.initial_points};
  EigenResult current = solve_radial(potential, params, grid, k, opts.require_bound);
  if (opts.r_max <= 0.0) {
    for (int pass = 0; pass < 4; ++pass) {
      const double e_top = current.energies.back();
      if (!(e_top < 0.0)) break;
      const double a2h2 = params.geometry.alpha * params.geometry.alpha *
                          params.constants.hbar * params.constants.hbar;
      const double k_b = std::sqrt(-2.0 * params.constants.mass * e_top / a2h2);
      const double r_t = outer_turning_point(potential, r_min, grid.r_max, e_top);
      const double target = std::max(6.0 * r_t, 50.0 / k_b);
      if (target <= grid.r_max) break;
      grid.r_max = 1.05 * target;
      current = solve_radial(potential, params, grid, k, opts.require_bound);
    }
  }

  std::vector<double> changes(k, std::numeric_limits<double>::infinity());
  for (int refinement = 0; refinement < opts.max_refinements; ++refinement) {
    RadialGrid finer = grid;
    finer.points = 2 * grid.points;
    EigenResult next = solve_radial(potential, params, finer, k, opts.require_bound);

    bool converged = true;
    for (int j = 0; j < k; ++j) {
      changes[j] = std::abs(next.energies[j] - current.energies[j]);
      if (changes[j] > rel_tol * std::max(std::abs(next.energies[j]), 1e-300)) {
        converged = false;
      }
    }
    if (converged) {
      if (opts.richardson) {
        // Second-order stencil: one extrapolation step on the grid pair.
        for (int j = 0; j < k; ++j) {
          next.energies[j] += (next.energies[j] - current.energies[j]) / 3.0;
        }
      }
      next.residuals = changes;
      return next;
    }
    grid = finer;
    current = std::move(next);
  }
  throw NonConvergenceError("refine_until: refinement budget exhausted before rel_tol");
}

GreeneAldrichError greene_aldrich_error(double delta, double r) {
  if (delta < 0.0 || !(r > 0.0)) {
    throw InvalidParameterError("greene_aldrich_error: requires delta >= 0 and r > 0");
  }
  const double u = delta * r;
  if (u < 1e-2) {
    // sinh(u)/u - 1 summed directly; avoids the cancellation in 1 - u/sinh(u).
    const double u2 = u * u;
    const double sm1 = u2 / 6.0 * (1.0 + u2 / 20.0 * (1.0 + u2 / 42.0 * (1.0 + u2 / 72.0)));
    const double s = 1.0 + sm1;
    return {sm1 * (2.0 + sm1) / (s * s), sm1 / s};
  }
  const double s = std::sinh(u) / u;
  const double err_r1 = 1.0 - 1.0 / s;
  const double err_r2 = 1.0 - 1.0 / (s * s);
  return {err_r2, err_r1};
}

ValidationReport validate_spectrum(const ModelParams& params, std::span<const int> l_list,
                                   std::span<const int> n_list, PotentialKind kind,
                                   double rel_tol, const RefineOptions& refine) {
  if (!(rel_tol > 0.0)) throw InvalidParameterError("validate_spectrum: rel_tol must be > 0");
  params.validate();
  if (l_list.empty() || n_list.empty()) {
    throw InvalidParameterError("validate_spectrum: l_list and n_list must be non-empty");
  }

  ValidationReport report;
  report.rel_tol = rel_tol;
  const int k = *std::max_element(n_list.begin(), n_list.end()) + 1;
  const double oracle_tol = std::min(rel_tol / 10.0, 1e-6);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  for (int l : l_list) {
    const auto potential = make_effective_potential(params, l, kind);
    EigenResult numeric;
    bool solved = false;
    try {
      numeric = refine_until(potential, params, k, oracle_tol, refine);
      solved = true;
      report.final_grid = numeric.grid;
    } catch (const SpectraError&) {
      // fall through: every row of this l becomes a failed row
    }
    for (int n : n_list) {
      ValidationRow row{n, l, nan, nan, nan, nan, false};
      try {
        row.e_analytic = kind == PotentialKind::kratzer ? energy_kratzer(params, n, l)
                                                        : energy_screened(params, n, l);
      } catch (const SpectraError&) {
      }
      if (solved && n < static_cast<int>(numeric.energies.size())) {
        row.e_numeric = numeric.energies[n];
      }
      if (std::isfinite(row.e_analytic) && std::isfinite(row.e_numeric)) {
        row.abs_err = std::abs(row.e_analytic - row.e_numeric);
        row.rel_err = row.abs_err / std::abs(row.e_analytic);
        row.pass = row.rel_err <= rel_tol;
      }
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace monopole
