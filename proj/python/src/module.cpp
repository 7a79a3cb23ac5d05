// Copyright 2026 The discord-bounds Authors
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

#include "discord/bounds.hpp"
#include "discord/correlation.hpp"
#include "discord/errors.hpp"
#include "discord/families.hpp"
#include "discord/oracle.hpp"
#include "discord/qstate.hpp"
#include "discord/state_io.hpp"

namespace py = pybind11;
using namespace py::literals;
using namespace discord;

namespace {

py::dict oracle_dict(const OracleResult& r) {
  py::dict d("value"_a = r.value, "evaluations"_a = r.evaluations,
             "converged"_a = r.converged);
  if (const auto* m = std::get_if<Vec3>(&r.argmin)) {
    d["direction"] = *m;
  } else {
    py::list elements;
    for (const Matrix2c& e : std::get<Povm>(r.argmin).elements()) elements.append(CMatrix(e));
    d["povm"] = elements;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bounds on the quantum discord of qubit-qudit states";

  // Messages read "Kind: detail".
  py::register_exception<Error>(m, "DiscordError", PyExc_ValueError);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init([](const CMatrix& entries, int dim_b) {
             return DensityMatrix::validated(entries, dim_b);
           }),
           "matrix"_a, "dim_b"_a)
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def_property_readonly("dim_b", &DensityMatrix::dim_b)
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def("purity", &DensityMatrix::purity)
      .def("entropy", [](const DensityMatrix& r) { return von_neumann_entropy(r); })
      .def("partial_trace", [](const DensityMatrix& r, const std::string& keep) {
        if (keep != "A" && keep != "B") throw py::value_error("keep must be 'A' or 'B'");
        return partial_trace(r, keep == "A" ? Subsystem::A : Subsystem::B);
      }, "keep"_a)
      .def("__repr__", [](const DensityMatrix& r) {
        return "<DensityMatrix 2x" + std::to_string(r.dim_b()) + ">";
      });

  py::class_<UnitaryMatrix>(m, "UnitaryMatrix")
      .def(py::init([](const CMatrix& u) { return UnitaryMatrix::validated(u); }), "matrix"_a)
      .def_property_readonly("matrix", &UnitaryMatrix::matrix)
      .def_property_readonly("dim", &UnitaryMatrix::dim);

  m.def("random_state", &random_state, "dim_b"_a, "rank"_a, "seed"_a);
  m.def("random_unitary", &random_unitary, "dim"_a, "seed"_a);
  m.def("random_traceless_unitary", &random_traceless_unitary, "dim"_a, "seed"_a);
  m.def("bell_diagonal", &make_bell_diagonal, "c1"_a, "c2"_a, "c3"_a);
  m.def("x_state", [](double x, double y, double s1, double s2, double s3) {
    return make_x_state({x, y, s1, s2, s3});
  }, "x"_a, "y"_a, "s1"_a, "s2"_a, "s3"_a);
  m.def("dqc1_state", &make_dqc1, "unitary"_a, "alpha"_a);
  m.def("binary_channel", &make_binary_channel, "p1"_a, "a"_a, "b"_a);
  m.def("apply_filter", &apply_filter, "rho"_a, "filter"_a);
  m.def("read_state", [](const std::string& p) { return read_state_file(p); }, "path"_a);
  m.def("write_state", [](const std::string& p, const DensityMatrix& r) {
    write_state_file(p, r);
  }, "path"_a, "rho"_a);

  m.def("h", &h, "z"_a);
  m.def("co", &co, "z"_a);

  m.def("q_matrix", [](const DensityMatrix& r) { return q_matrix(r).entries; }, "rho"_a);
  m.def("lorentz_spectrum", [](const DensityMatrix& r) {
    return lorentz_spectrum(q_matrix(r)).q;
  }, "rho"_a);
  m.def("conditional_discord", py::overload_cast<const DensityMatrix&, const Vec3&>(
                                   &conditional_discord), "rho"_a, "direction"_a);

  py::class_<DiscordBounds>(m, "DiscordBounds")
      .def_readonly("lower", &DiscordBounds::lower)
      .def_readonly("upper", &DiscordBounds::upper)
      .def_readonly("upper_weak", &DiscordBounds::upper_weak)
      .def_readonly("coincide", &DiscordBounds::coincide)
      .def_readonly("l_value", &DiscordBounds::l_value)
      .def_readonly("q2", &DiscordBounds::q2)
      .def_readonly("t1", &DiscordBounds::t1)
      .def_readonly("bloch", &DiscordBounds::bloch)
      .def_property_readonly("direction", [](const DiscordBounds& b) { return b.direction.m; })
      .def_property_readonly("spectrum", [](const DiscordBounds& b) { return b.spectrum.q; })
      .def_readonly("entropy_a", &DiscordBounds::entropy_a)
      .def_readonly("entropy_b", &DiscordBounds::entropy_b)
      .def_readonly("entropy_ab", &DiscordBounds::entropy_ab)
      .def("__repr__", [](const DiscordBounds& b) {
        return "<DiscordBounds lower=" + std::to_string(b.lower) +
               " upper=" + std::to_string(b.upper) + ">";
      });
  m.def("compute_bounds", &compute_bounds, "rho"_a);

  m.def("x_state_discord", [](double x, double y, double s1, double s2, double s3) {
    return x_state_discord({x, y, s1, s2, s3});
  }, "x"_a, "y"_a, "s1"_a, "s2"_a, "s3"_a);
  m.def("dqc1_bounds", [](const UnitaryMatrix& u, double alpha) {
    const DqcParams p = dqc_params(u, alpha);
    const DqcBounds b = dqc1_bounds(p);
    return py::dict("u1"_a = p.u1, "beta"_a = p.beta, "lower"_a = b.lower, "upper"_a = b.upper);
  }, "unitary"_a, "alpha"_a);
  m.def("accessible_info_bounds", [](double p1, const Vec3& a, const Vec3& b) {
    const ChannelBounds c = accessible_info_bounds(p1, a, b);
    return py::dict("holevo_chi"_a = c.holevo_chi, "lower"_a = c.lower, "upper"_a = c.upper,
                    "coincide"_a = c.coincide, "direction"_a = c.optimal_direction);
  }, "p1"_a, "a"_a, "b"_a);

  m.def("minimize_projective", [](const DensityMatrix& r) {
    py::gil_scoped_release release;
    const OracleResult o = minimize_projective(r);
    py::gil_scoped_acquire acquire;
    return oracle_dict(o);
  }, "rho"_a);
  m.def("minimize_povm", [](const DensityMatrix& r, int n) {
    py::gil_scoped_release release;
    const OracleResult o = minimize_povm(r, n);
    py::gil_scoped_acquire acquire;
    return oracle_dict(o);
  }, "rho"_a, "n_outcomes"_a = 4);
  m.def("wootters_concurrence", &wootters_concurrence, "rho"_a);
}
