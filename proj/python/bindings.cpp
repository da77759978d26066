// Copyright 2026 The reflectspin Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "reflectspin/coeff_matrix.hpp"
#include "reflectspin/errors.hpp"
#include "reflectspin/ground_state.hpp"
#include "reflectspin/model_io.hpp"
#include "reflectspin/report.hpp"
#include "reflectspin/spin_resolution.hpp"
#include "reflectspin/verification.hpp"

namespace py = pybind11;
using namespace reflectspin;

namespace {

SiteList sites_from(const std::vector<int>& twice_s) { return SiteList::from_twice_s(twice_s); }

std::vector<int> twice_spins(const SiteList& sites) {
  std::vector<int> out;
  for (const auto& s : sites.spins()) out.push_back(s.twice_s());
  return out;
}

// A parsed model together with its assembled operators.
struct PySystem {
  ModelFile model;
  AssembledSystem sys;

  explicit PySystem(ModelFile m) : model(std::move(m)), sys(assemble(model.spec)) {}

  GroundSpace ground() const {
    return solve(sys.H_full, model.options.degeneracy_tol.value_or(kDefaultDegeneracyTol));
  }
};

RunOptions run_options(std::optional<double> degeneracy_tol, std::optional<std::vector<double>> b_grid,
                       std::optional<Index> dimension_cap, std::uint64_t seed, unsigned workers) {
  RunOptions o;
  o.degeneracy_tol = degeneracy_tol;
  o.b_grid = std::move(b_grid);
  o.dimension_cap = dimension_cap;
  o.seed = seed;
  o.workers = workers;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reflection-positivity checks for doubled spin systems.";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());
  py::register_exception<VerificationFailure>(m, "VerificationFailure", base.ptr());

  py::enum_<Component>(m, "Component")
      .value("X", Component::X)
      .value("Y", Component::Y)
      .value("Z", Component::Z)
      .value("Plus", Component::Plus)
      .value("Minus", Component::Minus);

  m.def(
      "spin_matrix",
      [](int twice_s, Component a) { return site_component(SpinValue(twice_s), a).matrix(); },
      py::arg("twice_s"), py::arg("component"));
  m.def(
      "embed",
      [](const std::vector<int>& twice_s, const Matrix& op, std::size_t site) {
        return embed(Operator(op), site, sites_from(twice_s)).matrix();
      },
      py::arg("twice_s"), py::arg("op"), py::arg("site"));
  m.def(
      "tilde_unitary", [](const std::vector<int>& twice_s) { return tilde_unitary(sites_from(twice_s)).matrix(); },
      py::arg("twice_s"));

  py::class_<PySystem>(m, "System")
      .def_static(
          "from_json",
          [](const std::string& text, const std::string& source) {
            return PySystem(parse_model_text(text, source));
          },
          py::arg("text"), py::arg("source") = "<string>")
      .def_static(
          "load", [](const std::filesystem::path& path) { return PySystem(load_model(path)); }, py::arg("path"))
      .def_property_readonly("name", [](const PySystem& s) { return s.model.name; })
      .def_property_readonly("twice_s", [](const PySystem& s) { return twice_spins(s.sys.sites); })
      .def_property_readonly("subsystem_dim", [](const PySystem& s) { return s.sys.subsystem_dim(); })
      .def_property_readonly("num_crossings", [](const PySystem& s) { return s.sys.crossings.size(); })
      .def_property_readonly("h", [](const PySystem& s) { return s.sys.h.matrix(); })
      .def_property_readonly("h_tilde", [](const PySystem& s) { return s.sys.h_tilde.matrix(); })
      .def_property_readonly("U", [](const PySystem& s) { return s.sys.U.matrix(); })
      .def_property_readonly("H_full", [](const PySystem& s) { return s.sys.H_full.matrix(); })
      .def_property_readonly("flags",
                             [](const PySystem& s) {
                               py::dict d;
                               d["h_equals_h_tilde"] = s.sys.flags.h_equals_h_tilde;
                               d["h_real_symmetric"] = s.sys.flags.h_real_symmetric;
                               d["spin_rotation_invariant"] = s.sys.flags.spin_rotation_invariant;
                               return d;
                             })
      .def("reflection_symmetric", [](const PySystem& s) { return reflection_check(s.sys); })
      .def("ground_energy", [](const PySystem& s) { return s.ground().E0; })
      .def("ground_space",
           [](const PySystem& s) {
             const GroundSpace g = s.ground();
             Matrix vecs(s.sys.H_full.dim(), static_cast<Index>(g.multiplicity()));
             for (std::size_t i = 0; i < g.multiplicity(); ++i) vecs.col(static_cast<Index>(i)) = g.vectors[i];
             return py::make_tuple(g.E0, vecs);
           })
      .def(
          "energy_expression",
          [](const PySystem& s, const Matrix& c) { return energy_expression(CoefficientMatrix{c}, s.sys); },
          py::arg("c"))
      .def(
          "state_to_coeff", [](const PySystem& s, const Vector& psi) { return state_to_coeff(psi, s.sys.U).c; },
          py::arg("psi"))
      .def(
          "coeff_to_state",
          [](const PySystem& s, const Matrix& c) { return coeff_to_state(CoefficientMatrix{c}, s.sys.U); },
          py::arg("c"))
      .def("positive_ground_state",
           [](const PySystem& s) {
             const PositiveGroundState p = find_positive_ground_state(s.sys, s.ground());
             py::dict d;
             d["c_L"] = p.c_L.c;
             d["state"] = p.state;
             d["residual"] = p.residual;
             d["trace"] = p.trace;
             d["min_eig"] = p.min_eig;
             return d;
           })
      .def(
          "eb_margins",
          [](const PySystem& s, std::size_t crossing, const std::vector<double>& grid) {
            const PerturbationReport r = verify_eb_bound(s.sys, crossing, grid);
            return py::make_tuple(r.E0, r.E_b);
          },
          py::arg("crossing"), py::arg("b_grid") = default_b_grid())
      .def(
          "ice_rule_residual",
          [](const PySystem& s, std::size_t crossing, Component a) {
            return ice_rule_residual(s.ground(), s.sys, crossing, a);
          },
          py::arg("crossing"), py::arg("component"));

  m.def(
      "positive_part",
      [](const Matrix& c) {
        const PolarFactors p = positive_part(CoefficientMatrix{c});
        return py::make_tuple(p.u, p.c_R, p.c_L);
      },
      py::arg("c"), "Polar factors (u, c_R, c_L) with c = u c_R = c_L u.");
  m.def(
      "trace_inequality",
      [](const Matrix& c, const Matrix& M, const Matrix& N) {
        const TraceInequality t = trace_inequality_margin(c, M, N);
        return py::make_tuple(t.lhs, t.rhs);
      },
      py::arg("c"), py::arg("M"), py::arg("N"));
  m.def(
      "multiplet_counts",
      [](const std::vector<int>& twice_s) { return multiplet_basis(sites_from(twice_s)).counts(); },
      py::arg("twice_s"), "List of (2j, multiplicity) pairs.");
  m.def(
      "multiplet_basis", [](const std::vector<int>& twice_s) { return multiplet_basis(sites_from(twice_s)).V; },
      py::arg("twice_s"));
  m.def(
      "project_spin_zero",
      [](const std::vector<int>& twice_s, const Matrix& c) {
        const SpinZeroProjection p = project_spin_zero(CoefficientMatrix{c}, cached_multiplet_basis(sites_from(twice_s)));
        return py::make_tuple(p.c0.c, p.norm);
      },
      py::arg("twice_s"), py::arg("c"));
  m.def(
      "total_spin",
      [](const std::vector<int>& twice_s, const Vector& psi) {
        const SpinResolvedState r = total_spin(psi, sites_from(twice_s));
        py::dict d;
        d["s3"] = r.s3_expectation;
        d["s_squared"] = r.s_squared_expectation;
        d["s_squared_variance"] = r.s_squared_variance;
        d["twice_spin"] = r.sharp_twice_spin ? py::object(py::int_(*r.sharp_twice_spin)) : py::object(py::none());
        return d;
      },
      py::arg("twice_s"), py::arg("psi"));

  m.def(
      "verify_json",
      [](const std::filesystem::path& path, std::optional<double> degeneracy_tol,
         std::optional<std::vector<double>> b_grid, std::optional<Index> dimension_cap, std::uint64_t seed,
         unsigned workers) {
        const RunOptions o = run_options(degeneracy_tol, std::move(b_grid), dimension_cap, seed, workers);
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = run_corpus(model_paths(path), o);
        }
        return py::make_tuple(report_json_text(r), r.exit_code());
      },
      py::arg("path"), py::arg("degeneracy_tol") = py::none(), py::arg("b_grid") = py::none(),
      py::arg("dimension_cap") = py::none(), py::arg("seed") = RunOptions{}.seed, py::arg("workers") = 0u,
      "Run the verifier on a model file or directory. Returns (report JSON text, exit code).");
}
