// Copyright 2026 The eur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "eur/applications.hpp"
#include "eur/bounds.hpp"
#include "eur/channels.hpp"
#include "eur/error.hpp"
#include "eur/measures.hpp"
#include "eur/states.hpp"
#include "eur/sweep.hpp"

namespace py = pybind11;
using namespace eur;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexArray to_numpy(const ComplexMatrix& m) {
    ComplexArray out({m.rows(), m.cols()});
    auto buf = out.mutable_unchecked<2>();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            buf(r, c) = m(r, c);
        }
    }
    return out;
}

ComplexMatrix from_numpy(const ComplexArray& a) {
    if (a.ndim() != 2) {
        throw ValidationError("expected a 2-D array");
    }
    auto buf = a.unchecked<2>();
    ComplexMatrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
    for (py::ssize_t r = 0; r < a.shape(0); ++r) {
        for (py::ssize_t c = 0; c < a.shape(1); ++c) {
            m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = buf(r, c);
        }
    }
    return m;
}

Subsystem side(const std::string& s) {
    if (s == "A" || s == "a") {
        return Subsystem::A;
    }
    if (s == "B" || s == "b") {
        return Subsystem::B;
    }
    throw ValidationError("subsystem must be 'A' or 'B'");
}

ProjectiveBasis basis(const std::string& name) {
    if (name == "x") {
        return ProjectiveBasis::pauli_x();
    }
    if (name == "y") {
        return ProjectiveBasis::pauli_y();
    }
    if (name == "z") {
        return ProjectiveBasis::pauli_z();
    }
    throw ValidationError("basis must be 'x', 'y' or 'z'");
}

BellDiagonalCoeffs coeffs(double c1, double c2, double c3) { return {c1, c2, c3}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Entropic uncertainty with quantum memory under one-sided noise";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    m.def("bell_diagonal_density", [](double c1, double c2, double c3) {
        return to_numpy(bell_diagonal_density(coeffs(c1, c2, c3)));
    }, py::arg("c1"), py::arg("c2"), py::arg("c3"));

    m.def("evolve", [](const std::string& channel, double param, const ComplexArray& rho) {
        return to_numpy(apply_one_sided(make_channel(parse_channel_kind(channel), param), from_numpy(rho)));
    }, py::arg("channel"), py::arg("param"), py::arg("rho"),
       "Apply the AD or BPF channel at `param` to qubit A.");

    m.def("steer", [](const std::string& kind, double strength, const ComplexArray& rho) {
        return to_numpy(apply_steering(make_steering(parse_steering_kind(kind), strength), from_numpy(rho)));
    }, py::arg("kind"), py::arg("strength"), py::arg("rho"));

    m.def("d_of_t", &d_of_t, py::arg("rate"), py::arg("t"));

    m.def("hermitian_eigenvalues", [](const ComplexArray& a) {
        return hermitian_eigenvalues(from_numpy(a)).eigenvalues;
    });
    m.def("von_neumann_entropy", [](const ComplexArray& a) { return von_neumann_entropy(from_numpy(a)); });
    m.def("mutual_information", [](const ComplexArray& a) { return mutual_information(from_numpy(a)); });
    m.def("quantum_conditional_entropy", [](const ComplexArray& a, const std::string& cond) {
        return quantum_conditional_entropy(from_numpy(a), side(cond));
    }, py::arg("rho"), py::arg("conditioning") = "B");
    m.def("quantum_discord", [](const ComplexArray& a, const std::string& measured) {
        return quantum_discord(from_numpy(a), side(measured));
    }, py::arg("rho"), py::arg("measured") = "A");
    m.def("classical_correlation", [](const ComplexArray& a, const std::string& measured) {
        return classical_correlation(from_numpy(a), side(measured));
    }, py::arg("rho"), py::arg("measured") = "A");
    m.def("uncertainty_lhs", [](const ComplexArray& a, const std::string& b1, const std::string& b2) {
        return uncertainty_lhs(from_numpy(a), basis(b1), basis(b2));
    }, py::arg("rho"), py::arg("b1") = "x", py::arg("b2") = "z");

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("u_lhs", &BoundReport::u_lhs)
        .def_readonly("berta", &BoundReport::berta)
        .def_readonly("pati", &BoundReport::pati)
        .def_readonly("adabi", &BoundReport::adabi)
        .def_readonly("tightness_berta", &BoundReport::tightness_berta)
        .def_readonly("tightness_pati", &BoundReport::tightness_pati)
        .def_readonly("tightness_adabi", &BoundReport::tightness_adabi)
        .def_readonly("discord", &BoundReport::discord)
        .def_readonly("s_min_cond", &BoundReport::s_min_cond)
        .def_readonly("complementarity_c", &BoundReport::complementarity_c)
        .def("__repr__", [](const BoundReport& r) {
            std::ostringstream os;
            os << "BoundReport(u=" << r.u_lhs << ", berta=" << r.berta << ", pati=" << r.pati
               << ", adabi=" << r.adabi << ")";
            return os.str();
        });
    m.def("bound_report", [](const ComplexArray& a) { return bound_report(from_numpy(a)); },
          "All bounds for sigma_x / sigma_z on qubit A with memory B.");

    py::class_<ThresholdResult>(m, "ThresholdResult")
        .def_readonly("parameter_name", &ThresholdResult::parameter_name)
        .def_readonly("critical_value", &ThresholdResult::critical_value)
        .def_readonly("steering_strength_s", &ThresholdResult::steering_strength_s)
        .def_property_readonly("window", &ThresholdResult::window_description);
    m.def("witness_threshold", [](const std::string& channel, double c1, double c2, double c3, double s) {
        return witness_threshold(parse_channel_kind(channel), coeffs(c1, c2, c3), s);
    }, py::arg("channel"), py::arg("c1") = -1.0, py::arg("c2") = 1.0, py::arg("c3") = 1.0, py::arg("s") = 0.0);

    m.def("channel_capacity", [](const ComplexArray& a) { return channel_capacity(from_numpy(a)); });

    m.def("preset_names", &preset_names);
    m.def("run_preset_csv", [](const std::string& name, unsigned threads) {
        std::ostringstream os;
        emit_csv(run_sweeps(preset(name), threads == 0 ? default_thread_count() : threads), os);
        return os.str();
    }, py::arg("name"), py::arg("threads") = 0, "Figure preset data as CSV text.");
    m.def("errata_text", [](const std::string& channel, double c1, double c2, double c3, int points) {
        std::vector<double> grid;
        for (int i = 0; i < points; ++i) {
            grid.push_back(points == 1 ? 0.0 : static_cast<double>(i) / (points - 1));
        }
        return errata_report(coeffs(c1, c2, c3), parse_channel_kind(channel), grid).to_text();
    }, py::arg("channel"), py::arg("c1") = -0.5, py::arg("c2") = 0.4, py::arg("c3") = 0.8, py::arg("points") = 21);
}
