/*
   Copyright 2026 the fermatjac authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fermatjac/density.hpp"
#include "fermatjac/parity.hpp"
#include "fermatjac/selmer.hpp"

namespace py = pybind11;
using namespace fermatjac;

namespace {

py::object to_pyint(const cpp_int& v) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

}  // namespace

PYBIND11_MODULE(_fermatjac, m) {
    m.doc() = "root numbers, Kummer images and Selmer groups of Jacobians of "
              "y^p = x^r (delta - x)^s";

    py::register_exception<HypothesisError>(m, "HypothesisError");
    py::register_exception<ConsistencyError>(m, "ConsistencyError");
    py::register_exception<PrecisionError>(m, "PrecisionError");

    py::class_<Triple>(m, "Triple")
        .def(py::init<int64_t, int64_t, int64_t, int64_t>(), py::arg("r"), py::arg("s"),
             py::arg("t"), py::arg("p"))
        .def_readonly("r", &Triple::r)
        .def_readonly("s", &Triple::s)
        .def_readonly("t", &Triple::t)
        .def_readonly("p", &Triple::p)
        .def("reduced", &Triple::reduced)
        .def("__eq__", [](const Triple& a, const Triple& b) { return a == b; })
        .def("__repr__", [](const Triple& t) {
            return "Triple(r=" + std::to_string(t.r) + ", s=" + std::to_string(t.s) +
                   ", t=" + std::to_string(t.t) + ", p=" + std::to_string(t.p) + ")";
        });

    py::class_<RootNumberReport>(m, "RootNumberReport")
        .def_readonly("p", &RootNumberReport::p)
        .def_readonly("r", &RootNumberReport::r)
        .def_readonly("s", &RootNumberReport::s)
        .def_readonly("t", &RootNumberReport::t)
        .def_readonly("delta_input", &RootNumberReport::delta_input)
        .def_readonly("delta", &RootNumberReport::delta)
        .def_readonly("eps_inf", &RootNumberReport::eps_inf)
        .def_readonly("eps_p", &RootNumberReport::eps_p)
        .def_readonly("eps_ell", &RootNumberReport::eps_ell)
        .def_readonly("u_X", &RootNumberReport::u_X)
        .def_readonly("d", &RootNumberReport::d)
        .def_readonly("global_sign", &RootNumberReport::global);

    py::class_<SelmerReport>(m, "SelmerReport")
        .def_readonly("p", &SelmerReport::p)
        .def_readonly("r", &SelmerReport::r)
        .def_readonly("delta_input", &SelmerReport::delta_input)
        .def_readonly("delta", &SelmerReport::delta)
        .def_readonly("B", &SelmerReport::B)
        .def_readonly("b_symbol", &SelmerReport::b_sym)
        .def_readonly("generators", &SelmerReport::generators)
        .def_readonly("dimension", &SelmerReport::dimension)
        .def_readonly("S", &SelmerReport::S)
        .def_readonly("method", &SelmerReport::method);

    py::class_<ParityResult>(m, "ParityResult")
        .def_readonly("p", &ParityResult::p)
        .def_readonly("r", &ParityResult::r)
        .def_readonly("delta", &ParityResult::delta)
        .def_readonly("eps", &ParityResult::eps)
        .def_readonly("S", &ParityResult::S)
        .def_readonly("holds", &ParityResult::holds);

    py::class_<ParityScanReport>(m, "ParityScanReport")
        .def_readonly("p", &ParityScanReport::p)
        .def_readonly("delta_max", &ParityScanReport::delta_max)
        .def_readonly("n_enumerated", &ParityScanReport::n_enumerated)
        .def_readonly("n_skipped", &ParityScanReport::n_skipped)
        .def_readonly("n_checked", &ParityScanReport::n_checked)
        .def_readonly("n_holds", &ParityScanReport::n_holds)
        .def_readonly("failures", &ParityScanReport::failures)
        .def_readonly("records", &ParityScanReport::records);

    py::class_<DensityRow>(m, "DensityRow")
        .def_readonly("delta", &DensityRow::delta)
        .def_readonly("ord_p", &DensityRow::ord_p)
        .def_readonly("delta0_mod_p2", &DensityRow::delta0_mod_p2)
        .def_readonly("tau", &DensityRow::tau)
        .def_readonly("alpha", &DensityRow::alpha)
        .def_readonly("eps", &DensityRow::eps);

    py::class_<DensityReport>(m, "DensityReport")
        .def_readonly("p", &DensityReport::p)
        .def_readonly("x_max", &DensityReport::x_max)
        .def_readonly("n_total", &DensityReport::n_total)
        .def_readonly("n_plus", &DensityReport::n_plus)
        .def_readonly("fraction", &DensityReport::fraction)
        .def_readonly("alpha_constant_per_class", &DensityReport::alpha_constant_per_class)
        .def_readonly("rows", &DensityReport::rows);

    py::class_<LocalImage>(m, "LocalImage")
        .def_readonly("at_p", &LocalImage::at_p)
        .def_readonly("p", &LocalImage::p)
        .def_readonly("ell", &LocalImage::ell)
        .def_readonly("I", &LocalImage::I)
        .def_readonly("delta", &LocalImage::delta)
        .def_readonly("dimension", &LocalImage::dimension);

    m.def("root_number", &epsilon_global, py::arg("triple"), py::arg("delta"),
          "Global root number with all local factors.");
    m.def("epsilon_p3", &epsilon_p3, py::arg("delta"),
          "p = 3 closed form for the local factor at 3.");
    m.def(
        "selmer",
        [](int64_t r, int64_t delta, int64_t p, const std::string& method, int M) {
            if (method == "closed") return selmer_closed_form(r, delta, p);
            if (method == "direct") return selmer_direct(r, delta, p, M);
            if (method == "both") return selmer_both(r, delta, p, M);
            throw std::invalid_argument("method must be closed, direct or both");
        },
        py::arg("r"), py::arg("delta"), py::arg("p"), py::arg("method") = "closed",
        py::arg("padic_prec") = 4, "Selmer dimension, rank bound S and generators.");
    m.def("selmer_upper_bound", &selmer_upper_bound, py::arg("delta"), py::arg("p"),
          py::arg("dim_cl") = std::nullopt);
    m.def("parity_check", &parity_check, py::arg("triple"), py::arg("delta"));
    m.def("parity_scan", &parity_scan, py::arg("p"), py::arg("delta_max"),
          py::arg("r_values") = std::vector<int64_t>{}, py::arg("collect_records") = false,
          py::arg("threads") = 0);
    m.def("density", &density_experiment, py::arg("p"), py::arg("triple"), py::arg("x_max"),
          py::arg("keep_rows") = false, py::arg("threads") = 0);
    m.def("local_image_at_p", &local_image_at_p, py::arg("r"), py::arg("delta"),
          py::arg("p"));
    m.def("local_image_off_p", &local_image_off_p, py::arg("ell"), py::arg("delta"),
          py::arg("p"));
    m.def(
        "jacobi_sum",
        [](int64_t p, int64_t ell, int64_t r, int64_t s) {
            Triple t(r, s, p - r - s, p);
            FqField F = FqField::build(ell, splitting_data(ell, p).f);
            CycInt j = jacobi_sum(F, t);
            py::list out;
            for (auto& c : j.c) out.append(to_pyint(c));
            return out;
        },
        py::arg("p"), py::arg("ell"), py::arg("r") = 1, py::arg("s") = 1,
        "Coefficients of the Jacobi sum in the basis 1, omega, ..., omega^(p-2).");
    m.def(
        "count_points",
        [](int64_t p, int64_t ell, int64_t f, int64_t r, int64_t s, int64_t delta) {
            return count_affine_points(FqField::build(ell, f), Triple(r, s, p - r - s, p),
                                       delta);
        },
        py::arg("p"), py::arg("ell"), py::arg("f"), py::arg("r"), py::arg("s"),
        py::arg("delta"));
    m.def(
        "zeta_numerator",
        [](int64_t ell, int64_t p, int64_t r, int64_t s, int64_t delta) {
            py::list out;
            for (auto& c : zeta_numerator(ell, Triple(r, s, p - r - s, p), delta))
                out.append(to_pyint(c));
            return out;
        },
        py::arg("ell"), py::arg("p"), py::arg("r"), py::arg("s"), py::arg("delta"));
    m.def(
        "regular",
        [](int64_t p) {
            Regularity reg = irregularity_index(p);
            return py::make_tuple(reg.regular, reg.i_p);
        },
        py::arg("p"), "Returns (is_regular, irregularity_index).");
    m.def("legendre", &legendre, py::arg("a"), py::arg("p"));
    m.def("b_value", &B_value, py::arg("r"), py::arg("delta"), py::arg("p"),
          py::arg("prec") = 2);
    m.def("bernoulli_mod_p", &bernoulli_mod_p, py::arg("p"));
    m.def("alpha_tau",
          [](const Triple& t, int64_t delta) {
              AlphaTau at = alpha_tau(t, delta);
              return py::make_tuple(at.alpha, at.tau);
          },
          py::arg("triple"), py::arg("delta"));
}
