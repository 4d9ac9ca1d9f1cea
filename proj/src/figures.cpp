#include "monopole_spectra/figures.hpp"

#include <cmath>
#include <cstdio>

namespace monopole {

std::optional<FigureId> parse_figure_id(std::string_view name) {
  if (name == "fig1") return FigureId::fig1;
  if (name == "fig2") return FigureId::fig2;
  if (name == "fig3") return FigureId::fig3;
  if (name == "fig4") return FigureId::fig4;
  return std::nullopt;
}

std::string figure_id_name(FigureId id) {
  switch (id) {
    case FigureId::fig1: return "fig1";
    case FigureId::fig2: return "fig2";
    case FigureId::fig3: return "fig3";
    case FigureId::fig4: return "fig4";
  }
  return "fig?";
}

namespace {

ModelParams preset_params(double A, double D, double delta) {
  ModelParams p;
  p.constants = {1.0, 1.0, 1.0};  // hbar = M = q = 1 in every preset
  p.geometry.alpha = 1.0;         // sweeps overwrite alpha per point
  p.kratzer = {A, D};
  p.screening.delta = delta;
  return p;
}

std::string level_curve_name(FigureId id, QuantumNumbers q) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%s_n%d_l%d", figure_id_name(id).c_str(), q.n, q.l);
  return buf;
}

}  // namespace

FigureSpec default_figure_spec(FigureId id) {
  FigureSpec spec;
  spec.id = id;
  switch (id) {
    case FigureId::fig1:
      // Kratzer levels E_nl(alpha), A = 0.5, D = 1; three l per n panel.
      spec.base = preset_params(0.5, 1.0, 0.0);
      spec.sweep = {0.3, 1.0, 200};
      for (int n = 0; n <= 2; ++n)
        for (int l = 1; l <= 3; ++l) spec.levels.push_back({n, l});
      break;
    case FigureId::fig2:
      // Screened effective potential over r, three screening strengths per panel.
      spec.base = preset_params(2.0, 4.0, 0.0);
      spec.sweep = {0.0, 6.0, 200};  // sampled on (0, 6]
      for (double delta : {0.0, 0.1, 0.2}) {
        char label[32];
        std::snprintf(label, sizeof(label), "a_delta%.1f", delta);
        spec.potential_curves.push_back({label, 2, 0.5, delta});
      }
      for (double delta : {0.0, 0.1, 0.2}) {
        char label[32];
        std::snprintf(label, sizeof(label), "b_delta%.1f", delta);
        spec.potential_curves.push_back({label, 1, 0.5, delta});
      }
      break;
    case FigureId::fig3:
      // Screened levels E_nl(alpha), A = 2, D = 4, delta = 0.001.
      spec.base = preset_params(2.0, 4.0, 0.001);
      spec.sweep = {0.3, 1.0, 200};
      for (int n = 0; n <= 2; ++n)
        for (int l = 0; l <= 4; ++l) spec.levels.push_back({n, l});
      break;
    case FigureId::fig4:
      // E_01(alpha) for four screening strengths.
      spec.base = preset_params(2.0, 4.0, 0.001);
      spec.sweep = {0.3, 1.0, 200};
      spec.level = {0, 1};
      spec.deltas = {0.001, 0.005, 0.010, 0.015};
      break;
  }
  return spec;
}

namespace {

std::vector<FigureCurve> level_sweep(const FigureSpec& spec, PotentialKind kind) {
  std::vector<FigureCurve> curves;
  const double step = (spec.sweep.hi - spec.sweep.lo) / spec.sweep.points;
  for (auto q : spec.levels) {
    FigureCurve curve{level_curve_name(spec.id, q), {}};
    for (int i = 0; i < spec.sweep.points; ++i) {
      const double alpha = spec.sweep.lo + i * step;
      ModelParams p = spec.base;
      p.geometry.alpha = alpha;
      try {
        const double e = kind == PotentialKind::kratzer ? energy_kratzer(p, q.n, q.l)
                                                        : energy_screened(p, q.n, q.l);
        curve.points.push_back({alpha, e});
      } catch (const SpectraError&) {
        // below the binding threshold: point omitted
      }
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

}  // namespace

std::vector<FigureCurve> compute_figure(const FigureSpec& spec) {
  std::vector<FigureCurve> curves;
  switch (spec.id) {
    case FigureId::fig1:
      return level_sweep(spec, PotentialKind::kratzer);
    case FigureId::fig3:
      return level_sweep(spec, PotentialKind::screened);
    case FigureId::fig2: {
      const double step = (spec.sweep.hi - spec.sweep.lo) / spec.sweep.points;
      for (const auto& pc : spec.potential_curves) {
        ModelParams p = spec.base;
        p.geometry.alpha = pc.alpha;
        p.screening.delta = pc.delta;
        const auto potential = make_effective_potential(p, pc.l, PotentialKind::screened);
        FigureCurve curve{figure_id_name(spec.id) + "_" + pc.label, {}};
        for (int i = 1; i <= spec.sweep.points; ++i) {  // open at r = 0
          const double r = spec.sweep.lo + i * step;
          curve.points.push_back({r, potential(r)});
        }
        curves.push_back(std::move(curve));
      }
      return curves;
    }
    case FigureId::fig4: {
      const double step = (spec.sweep.hi - spec.sweep.lo) / spec.sweep.points;
      for (double delta : spec.deltas) {
        char label[48];
        std::snprintf(label, sizeof(label), "%s_delta%.3f", figure_id_name(spec.id).c_str(), delta);
        FigureCurve curve{label, {}};
        for (int i = 0; i < spec.sweep.points; ++i) {
          const double alpha = spec.sweep.lo + i * step;
          ModelParams p = spec.base;
          p.geometry.alpha = alpha;
          p.screening.delta = delta;
          try {
            curve.points.push_back({alpha, energy_screened(p, spec.level.n, spec.level.l)});
          } catch (const SpectraError&) {
          }
        }
        curves.push_back(std::move(curve));
      }
      return curves;
    }
  }
  return curves;
}

}  // namespace monopole
