/// Python bindings for the nonlocal-oscillator laboratory. Exposes the core
/// types, the mode/field operations, dynamics, constraint reconstruction,
/// the smeared bracket kernel, and the quantum layer as nlosc._core.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nlosc/brackets.hpp"
#include "nlosc/constraints.hpp"
#include "nlosc/dynamics.hpp"
#include "nlosc/modes.hpp"
#include "nlosc/quadrature.hpp"
#include "nlosc/quantum.hpp"

namespace py = pybind11;
using namespace nlosc;
namespace qn = nlosc::quantum;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized-Ostrogradski treatment of the nonlocal oscillator "
            "L = -(m/alpha^2) q(t) q(t+alpha)";

  // ---- errors ----
  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<NonPositiveParameter>(m, "NonPositiveParameter", error);
  py::register_exception<RealityViolation>(m, "RealityViolation", error);
  py::register_exception<NonRealTrajectory>(m, "NonRealTrajectory", error);
  py::register_exception<NonRealEnergy>(m, "NonRealEnergy", error);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error);
  py::register_exception<DivergentZeroPoint>(m, "DivergentZeroPoint", error);

  // ---- core types ----
  py::class_<PhysicalParams>(m, "PhysicalParams", "Mass, delay, and action scale")
      .def(py::init([](double m_, double alpha_, double hbar_) {
             return validate_params(m_, alpha_, hbar_);
           }),
           py::arg("m") = 1.0, py::arg("alpha") = 1.0, py::arg("hbar") = 1.0)
      .def_readonly("m", &PhysicalParams::m)
      .def_readonly("alpha", &PhysicalParams::alpha)
      .def_readonly("hbar", &PhysicalParams::hbar)
      .def("__repr__", [](const PhysicalParams& p) {
        return "PhysicalParams(m=" + std::to_string(p.m) + ", alpha=" +
               std::to_string(p.alpha) + ", hbar=" + std::to_string(p.hbar) + ")";
      });

  py::class_<ModeCoeffs>(m, "ModeCoeffs",
                         "Coefficients a_n over the window -n_max <= n < n_max")
      .def(py::init<int, bool>(), py::arg("n_max"), py::arg("real") = false)
      .def_readonly("n_max", &ModeCoeffs::n_max)
      .def_readwrite("real", &ModeCoeffs::real)
      .def("get", [](const ModeCoeffs& c, int n) { return c.at(n); }, py::arg("n"))
      .def("set", [](ModeCoeffs& c, int n, Complex z) { c.at(n) = z; }, py::arg("n"),
           py::arg("value"))
      .def("in_window", &ModeCoeffs::in_window, py::arg("n"))
      .def("max_abs", &ModeCoeffs::max_abs);

  py::class_<LambdaField>(m, "LambdaField",
                          "Q sampled over the canonical window [-alpha, alpha)")
      .def_static("from_modes", &LambdaField::from_modes, py::arg("coeffs"),
                  py::arg("params"), py::arg("grid_size") = 1024)
      .def_static("from_samples", &LambdaField::from_samples, py::arg("samples"),
                  py::arg("params"))
      .def_readonly("params", &LambdaField::params)
      .def_readonly("grid_size", &LambdaField::grid_size)
      .def_readonly("samples", &LambdaField::samples)
      .def("lambda_at", &LambdaField::lambda_at, py::arg("j"));

  py::class_<ReducedLambda>(m, "ReducedLambda")
      .def_readonly("lambda_", &ReducedLambda::lambda)
      .def_readonly("sign", &ReducedLambda::sign);

  py::class_<Trajectory>(m, "Trajectory", "Real samples of q(t)")
      .def_readonly("times", &Trajectory::times)
      .def_readonly("values", &Trajectory::values);

  py::class_<CVars>(m, "CVars", "Oscillator variables c_k, k = 0..k_max-1")
      .def(py::init<int>(), py::arg("k_max"))
      .def_readonly("k_max", &CVars::k_max)
      .def_readonly("values", &CVars::values)
      .def("get", [](const CVars& c, int k) { return c.at(k); }, py::arg("k"))
      .def("set", [](CVars& c, int k, Complex z) { c.at(k) = z; }, py::arg("k"),
           py::arg("value"));

  py::class_<FrequencySpectrum>(m, "FrequencySpectrum",
                                "Alternating-sign frequency ladder of the delay")
      .def(py::init([](double alpha) { return FrequencySpectrum{alpha}; }),
           py::arg("alpha"))
      .def_readonly("alpha", &FrequencySpectrum::alpha)
      .def("omega", &FrequencySpectrum::omega, py::arg("n"))
      .def("characteristic_cos", &FrequencySpectrum::characteristic_cos, py::arg("n"));

  py::class_<TestFunction>(m, "TestFunction",
                           "Compactly supported test function for smeared brackets")
      .def_static("indicator", &TestFunction::indicator, py::arg("lo"), py::arg("hi"))
      .def_static("bump", &TestFunction::bump, py::arg("lo"), py::arg("hi"))
      .def("translated", &TestFunction::translated, py::arg("shift"))
      .def_readonly("lo", &TestFunction::lo)
      .def_readonly("hi", &TestFunction::hi);

  // ---- core operations ----
  m.def("validate_params", &validate_params, py::arg("m"), py::arg("alpha"),
        py::arg("hbar") = 1.0);
  m.def("reduce_antiperiodic", &reduce_antiperiodic, py::arg("lambda_"), py::arg("alpha"),
        "Fold lambda into [-alpha, alpha) tracking the antiperiodic sign");
  m.def("extend_field", &extend_field, py::arg("field"), py::arg("lambda_"),
        "Q(lambda) anywhere via the antiperiodic extension");

  // ---- modes ----
  m.def("mode_omega", &mode_omega, py::arg("n"), py::arg("alpha"),
        "omega_n = pi (2n+1) / (2 alpha)");
  m.def("psi", &psi, py::arg("n"), py::arg("lambda_"), py::arg("alpha"),
        "Antiperiodic orthonormal basis function");
  m.def("synthesize", &synthesize, py::arg("coeffs"), py::arg("lambda_"), py::arg("alpha"));
  m.def("project", &project, py::arg("field"), py::arg("n_max"));
  m.def("gram_matrix", &gram_matrix, py::arg("n_max"), py::arg("alpha"),
        py::arg("grid_size") = 1024);
  m.def("reality_residual", &reality_residual, py::arg("coeffs"));
  m.def("check_reality", &check_reality, py::arg("coeffs"), py::arg("tol"));
  m.def("to_c_vars", &to_c_vars, py::arg("coeffs"), py::arg("params"),
        py::arg("tol") = 1e-10);
  m.def("from_c_vars", &from_c_vars, py::arg("c"), py::arg("params"));

  // ---- dynamics ----
  m.def("evolve_modes", &evolve_modes, py::arg("coeffs"), py::arg("t"), py::arg("alpha"));
  m.def("shift_evolve_field", &shift_evolve_field, py::arg("field"), py::arg("t"));
  m.def("q_value", &q_value, py::arg("coeffs"), py::arg("t"), py::arg("alpha"));
  m.def("trajectory", &trajectory, py::arg("coeffs"), py::arg("times"), py::arg("alpha"),
        py::arg("imag_tol") = 1e-10);
  m.def("eom_residual", &eom_residual, py::arg("coeffs"), py::arg("t"), py::arg("alpha"),
        "|q(t - alpha) + q(t + alpha)|");
  m.def("hamiltonian_field", &hamiltonian_field, py::arg("field"), py::arg("params"),
        py::arg("imag_tol") = 1e-10);
  m.def("hamiltonian_modes", &hamiltonian_modes, py::arg("coeffs"), py::arg("params"),
        py::arg("imag_tol") = 1e-10);
  m.def("hamiltonian_c", &hamiltonian_c, py::arg("c"), py::arg("params"));
  m.def("harmonic_approx_frequency", &harmonic_approx_frequency, py::arg("alpha"),
        "sqrt(2)/alpha from the second-order small-delay expansion");

  // ---- constraints ----
  m.def("delta_kernel", &delta_kernel, py::arg("lambda_"), py::arg("params"));
  m.def("epsilon_density",
        [](const LambdaField& field, double lambda) {
          const EpsilonDensity density = epsilon_density(field, lambda);
          std::vector<std::pair<double, Complex>> terms;
          for (const auto& term : density.terms)
            terms.emplace_back(term.location, term.weight);
          return terms;
        },
        py::arg("field"), py::arg("lambda_"),
        "The two delta terms as (location, weight) pairs");
  m.def("momentum_at", &momentum_at, py::arg("field"), py::arg("params"),
        py::arg("lambda_"));
  m.def("momentum_field",
        [](const LambdaField& field, const PhysicalParams& params) {
          return momentum_field(field, params).samples;
        },
        py::arg("field"), py::arg("params"), "P over the field's grid");
  m.def("momentum_from_epsilon", &momentum_from_epsilon, py::arg("field"),
        py::arg("lambda_"));
  m.def("secondary_constraint_integral", &secondary_constraint_integral, py::arg("field"),
        py::arg("lambda_"));
  m.def("phi2_residual", &phi2_residual, py::arg("coeffs"), py::arg("lambda_samples"),
        py::arg("alpha"));

  // ---- brackets ----
  m.def("f_kernel_smeared", &f_kernel_smeared, py::arg("f"), py::arg("g"), py::arg("params"));
  m.def("check_antisymmetry", &check_antisymmetry, py::arg("f"), py::arg("g"),
        py::arg("params"));
  m.def("check_shift_identity", &check_shift_identity, py::arg("f"), py::arg("g"),
        py::arg("params"));
  m.def("qp_bracket_smeared", &qp_bracket_smeared, py::arg("f"), py::arg("g"),
        py::arg("params"));
  m.def("pp_bracket_smeared", &pp_bracket_smeared, py::arg("f"), py::arg("g"),
        py::arg("params"));
  m.def("mode_bracket", &mode_bracket, py::arg("m"), py::arg("n"), py::arg("params"));
  m.def("mode_bracket_from_kernel", &mode_bracket_from_kernel, py::arg("m"), py::arg("n"),
        py::arg("params"), py::arg("grid_size") = 256);
  m.def("c_bracket", &c_bracket, py::arg("m"), py::arg("n"));
  m.def("hamiltonian_flow_check", &hamiltonian_flow_check, py::arg("coeffs"),
        py::arg("params"));

  // ---- quantum ----
  py::module_ qm = m.def_submodule("quantum", "Truncated Fock-space realization");

  py::class_<qn::FockSpace>(qm, "FockSpace", "K modes with occupations 0..d-1")
      .def(py::init<int, int>(), py::arg("k_modes"), py::arg("dim_per_mode"))
      .def_readonly("k_modes", &qn::FockSpace::k_modes)
      .def_readonly("dim_per_mode", &qn::FockSpace::dim_per_mode)
      .def("dimension", &qn::FockSpace::dimension, py::arg("budget") = 1000000LL);

  qm.def("omega", &qn::omega, py::arg("k"), py::arg("alpha"));
  qm.def("energy",
         [](const std::vector<int>& occ, const PhysicalParams& p) {
           return qn::energy(OccupationState{occ}, p);
         },
         py::arg("occupation"), py::arg("params"));
  qm.def("spectrum",
         [](const qn::FockSpace& space, const PhysicalParams& p, long long budget) {
           std::vector<std::pair<std::vector<int>, double>> out;
           for (const qn::Level& level : qn::spectrum(space, p, budget))
             out.emplace_back(level.occ.occ, level.energy);
           return out;
         },
         py::arg("space"), py::arg("params"), py::arg("budget") = 1000000LL,
         "Sorted (occupation, energy) pairs");
  qm.def("index_of_occupation",
         [](const qn::FockSpace& space, const std::vector<int>& occ) {
           return qn::index_of_occupation(space, OccupationState{occ});
         },
         py::arg("space"), py::arg("occupation"));
  qm.def("occupation_of_index",
         [](const qn::FockSpace& space, long long index) {
           return qn::occupation_of_index(space, index).occ;
         },
         py::arg("space"), py::arg("index"));
  qm.def("build_ladder", &qn::build_ladder, py::arg("space"), py::arg("k"),
         "(lowering, raising) matrices for mode k");
  qm.def("build_hamiltonian_matrix", &qn::build_hamiltonian_matrix, py::arg("space"),
         py::arg("params"));
  qm.def("zero_point_energy", &qn::zero_point_energy, py::arg("space"), py::arg("params"),
         "Always raises DivergentZeroPoint");
}
