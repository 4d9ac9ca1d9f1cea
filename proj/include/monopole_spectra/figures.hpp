#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monopole_spectra/spectra.hpp"

namespace monopole {

enum class FigureId { fig1, fig2, fig3, fig4 };

std::optional<FigureId> parse_figure_id(std::string_view name);
std::string figure_id_name(FigureId id);

struct SweepRange {
  double lo;
  double hi;
  int points;
};

/// Declarative description of one figure reproduction: which quantity is
/// swept, over which range, and the fixed parameters of each curve.
/// default_figure_spec() returns the bundled preset for each figure id;
/// every field can be overridden before calling compute_figure().
struct FigureSpec {
  struct PotentialCurve {  // fig2 only
    std::string label;
    int l;
    double alpha;
    double delta;
  };

  FigureId id = FigureId::fig1;
  SweepRange sweep{0.3, 1.0, 200};         // alpha sweep (fig1/3/4) or r sweep (fig2)
  ModelParams base;                        // constants, Kratzer well, screening
  std::vector<QuantumNumbers> levels;      // fig1, fig3
  QuantumNumbers level{0, 1};              // fig4
  std::vector<double> deltas;              // fig4
  std::vector<PotentialCurve> potential_curves;  // fig2
  double series_tolerance = 1e-10;
};

FigureSpec default_figure_spec(FigureId id);

/// One exported curve: the base name of the data file (without extension)
/// plus its (x, y) samples. Sweep points where the requested state does not
/// exist (e.g. zeta >= 0 below the binding threshold in alpha) are omitted.
struct FigureCurve {
  std::string name;
  std::vector<std::array<double, 2>> points;
};

std::vector<FigureCurve> compute_figure(const FigureSpec& spec);

}  // namespace monopole
