#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monopole_spectra/figures.hpp"
#include "monopole_spectra/oracle.hpp"

namespace py = pybind11;
using namespace monopole;

namespace {

ModelParams make_params(double alpha, double A, double D, double delta, double hbar,
                        double mass, double charge) {
  ModelParams p;
  p.constants = {hbar, mass, charge};
  p.geometry.alpha = alpha;
  p.kratzer = {A, D};
  p.screening.delta = delta;
  p.validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bound-state spectra of a charged particle in a global-monopole background "
            "under Kratzer-type potentials: closed forms, special functions and an "
            "independent finite-difference eigensolver.";

  auto base = py::register_exception<SpectraError>(m, "SpectraError");
  py::register_exception<InvalidParameterError>(m, "InvalidParameterError", base);
  py::register_exception<NoBoundStateError>(m, "NoBoundStateError", base);
  py::register_exception<InadmissibleStateError>(m, "InadmissibleStateError", base);
  py::register_exception<ToleranceNotReachedError>(m, "ToleranceNotReachedError", base);
  py::register_exception<NonConvergenceError>(m, "NonConvergenceError", base);
  py::register_exception<InsufficientBoundStatesError>(m, "InsufficientBoundStatesError", base);
  py::register_exception<NoMinimumError>(m, "NoMinimumError", base);

  py::class_<PhysicalConstants>(m, "PhysicalConstants")
      .def(py::init<>())
      .def_readwrite("hbar", &PhysicalConstants::hbar)
      .def_readwrite("mass", &PhysicalConstants::mass)
      .def_readwrite("charge", &PhysicalConstants::charge);

  py::class_<MonopoleGeometry>(m, "MonopoleGeometry")
      .def(py::init<>())
      .def_readwrite("alpha", &MonopoleGeometry::alpha);

  py::class_<KratzerParams>(m, "KratzerParams")
      .def(py::init<>())
      .def_readwrite("A", &KratzerParams::A)
      .def_readwrite("D", &KratzerParams::D);

  py::class_<ScreeningParams>(m, "ScreeningParams")
      .def(py::init<>())
      .def_readwrite("delta", &ScreeningParams::delta);

  py::class_<QuantumNumbers>(m, "QuantumNumbers")
      .def(py::init<int, int>(), py::arg("n") = 0, py::arg("l") = 0)
      .def_readwrite("n", &QuantumNumbers::n)
      .def_readwrite("l", &QuantumNumbers::l);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init<>())
      .def_readwrite("constants", &ModelParams::constants)
      .def_readwrite("geometry", &ModelParams::geometry)
      .def_readwrite("kratzer", &ModelParams::kratzer)
      .def_readwrite("screening", &ModelParams::screening)
      .def("validate", &ModelParams::validate);

  m.def("make_params", &make_params, py::arg("alpha"), py::arg("A"), py::arg("D"),
        py::arg("delta") = 0.0, py::arg("hbar") = 1.0, py::arg("mass") = 1.0,
        py::arg("charge") = 1.0, "Build and validate a ModelParams in one call.");

  py::class_<SeriesValue>(m, "SeriesValue")
      .def_readonly("value", &SeriesValue::value)
      .def_readonly("error_bound", &SeriesValue::error_bound)
      .def_readonly("terms_used", &SeriesValue::terms_used);

  py::class_<DerivedCouplings>(m, "DerivedCouplings")
      .def_readonly("S", &DerivedCouplings::S)
      .def_readonly("K", &DerivedCouplings::K)
      .def_readonly("zeta", &DerivedCouplings::zeta)
      .def_readonly("lambda_sq", &DerivedCouplings::lambda_sq)
      .def_readonly("lambdaK_sq", &DerivedCouplings::lambdaK_sq)
      .def_readonly("j_sq", &DerivedCouplings::j_sq)
      .def_readonly("ell", &DerivedCouplings::ell)
      .def_readonly("d", &DerivedCouplings::d)
      .def_readonly("eta_sq", &DerivedCouplings::eta_sq);

  m.def("monopole_series_S", &monopole_series_S, py::arg("alpha"), py::arg("tolerance") = 1e-10,
        py::arg("max_terms") = 2'000'000);
  m.def("hyp1f1_terminating", &hyp1f1_terminating, py::arg("n"), py::arg("b"), py::arg("x"));
  m.def("hyp2f1_terminating", &hyp2f1_terminating, py::arg("n"), py::arg("b"), py::arg("c"),
        py::arg("y"));
  m.def("integrate_radial", &integrate_radial, py::arg("f"), py::arg("r_min"), py::arg("r_max"),
        py::arg("rel_tol") = 1e-10);
  m.def("derive_couplings", &derive_couplings, py::arg("params"), py::arg("l"),
        py::arg("series_tolerance") = 1e-10, py::arg("series_max_terms") = 2'000'000);

  py::enum_<PotentialKind>(m, "PotentialKind")
      .value("kratzer", PotentialKind::kratzer)
      .value("screened", PotentialKind::screened);

  py::class_<BoundState>(m, "BoundState")
      .def_readonly("quantum", &BoundState::quantum)
      .def_readonly("kind", &BoundState::kind)
      .def_readonly("energy", &BoundState::energy)
      .def_readonly("normalization", &BoundState::normalization);

  m.def("effective_potential_kratzer", &effective_potential_kratzer, py::arg("r"),
        py::arg("params"), py::arg("l"));
  m.def("effective_potential_screened", &effective_potential_screened, py::arg("r"),
        py::arg("params"), py::arg("l"));

  py::class_<PotentialMinimum>(m, "PotentialMinimum")
      .def_readonly("r_star", &PotentialMinimum::r_star)
      .def_readonly("v_star", &PotentialMinimum::v_star);

  m.def("potential_minimum", &potential_minimum, py::arg("params"), py::arg("l"),
        py::arg("kind"));
  m.def("energy_kratzer", &energy_kratzer, py::arg("params"), py::arg("n"), py::arg("l"));
  m.def("energy_screened", &energy_screened, py::arg("params"), py::arg("n"), py::arg("l"));
  m.def("max_radial_quantum_number", &max_radial_quantum_number, py::arg("params"),
        py::arg("l"));

  py::class_<RadialWavefunction>(m, "RadialWavefunction")
      .def_static("kratzer", &RadialWavefunction::kratzer, py::arg("params"), py::arg("n"),
                  py::arg("l"))
      .def_static("screened", &RadialWavefunction::screened, py::arg("params"), py::arg("n"),
                  py::arg("l"))
      .def("__call__", &RadialWavefunction::operator(), py::arg("r"))
      .def("sample",
           [](const RadialWavefunction& w, const std::vector<double>& r) {
             std::vector<double> out(r.size());
             for (std::size_t i = 0; i < r.size(); ++i) out[i] = w(r[i]);
             return out;
           },
           py::arg("r"))
      .def_property_readonly("state", &RadialWavefunction::state)
      .def_property_readonly("decay_rate", &RadialWavefunction::decay_rate);

  py::class_<SpectrumRow>(m, "SpectrumRow")
      .def_readonly("n", &SpectrumRow::n)
      .def_readonly("l", &SpectrumRow::l)
      .def_readonly("energy", &SpectrumRow::energy);

  py::class_<SpectrumTable>(m, "SpectrumTable")
      .def_readonly("kind", &SpectrumTable::kind)
      .def_readonly("rows", &SpectrumTable::rows)
      .def_readonly("warnings", &SpectrumTable::warnings);

  m.def("build_spectrum_table", &build_spectrum_table, py::arg("params"), py::arg("kind"),
        py::arg("l_max"), py::arg("per_l_n_max"));

  py::class_<RadialGrid>(m, "RadialGrid")
      .def(py::init([](double r_min, double r_max, int points) {
             RadialGrid g{r_min, r_max, points};
             g.validate();
             return g;
           }),
           py::arg("r_min"), py::arg("r_max"), py::arg("points"))
      .def_readonly("r_min", &RadialGrid::r_min)
      .def_readonly("r_max", &RadialGrid::r_max)
      .def_readonly("points", &RadialGrid::points)
      .def_property_readonly("spacing", &RadialGrid::spacing);

  py::class_<EigenResult>(m, "EigenResult")
      .def_readonly("grid", &EigenResult::grid)
      .def_readonly("energies", &EigenResult::energies)
      .def_readonly("vectors", &EigenResult::vectors)
      .def_readonly("residuals", &EigenResult::residuals);

  m.def("count_states_below", &count_states_below, py::arg("potential"), py::arg("params"),
        py::arg("grid"), py::arg("energy"));
  m.def("solve_radial", &solve_radial, py::arg("potential"), py::arg("params"), py::arg("grid"),
        py::arg("k"), py::arg("require_bound") = false);

  py::class_<RefineOptions>(m, "RefineOptions")
      .def(py::init<>())
      .def_readwrite("initial_points", &RefineOptions::initial_points)
      .def_readwrite("max_refinements", &RefineOptions::max_refinements)
      .def_readwrite("require_bound", &RefineOptions::require_bound)
      .def_readwrite("richardson", &RefineOptions::richardson)
      .def_readwrite("r_min", &RefineOptions::r_min)
      .def_readwrite("r_max", &RefineOptions::r_max);

  m.def("refine_until", &refine_until, py::arg("potential"), py::arg("params"), py::arg("k"),
        py::arg("rel_tol"), py::arg("options") = RefineOptions{});

  py::class_<GreeneAldrichError>(m, "GreeneAldrichError")
      .def_readonly("err_r2", &GreeneAldrichError::err_r2)
      .def_readonly("err_r1", &GreeneAldrichError::err_r1);

  m.def("greene_aldrich_error", &greene_aldrich_error, py::arg("delta"), py::arg("r"));

  py::class_<ValidationRow>(m, "ValidationRow")
      .def_readonly("n", &ValidationRow::n)
      .def_readonly("l", &ValidationRow::l)
      .def_readonly("e_analytic", &ValidationRow::e_analytic)
      .def_readonly("e_numeric", &ValidationRow::e_numeric)
      .def_readonly("abs_err", &ValidationRow::abs_err)
      .def_readonly("rel_err", &ValidationRow::rel_err)
      .def_readonly("pass_flag", &ValidationRow::pass);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("rows", &ValidationReport::rows)
      .def_readonly("rel_tol", &ValidationReport::rel_tol)
      .def_readonly("final_grid", &ValidationReport::final_grid)
      .def("all_pass", &ValidationReport::all_pass);

  m.def("validate_spectrum",
        [](const ModelParams& params, const std::vector<int>& l_list,
           const std::vector<int>& n_list, PotentialKind kind, double rel_tol,
           const RefineOptions& refine) {
          return validate_spectrum(params, l_list, n_list, kind, rel_tol, refine);
        },
        py::arg("params"), py::arg("l_list"), py::arg("n_list"), py::arg("kind"),
        py::arg("rel_tol"), py::arg("refine") = RefineOptions{});
}
