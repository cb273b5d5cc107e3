// Copyright 2026 The pipcodes Authors
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
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pipcodes/channels.h"
#include "pipcodes/cli.h"
#include "pipcodes/clifford.h"
#include "pipcodes/code_finder.h"
#include "pipcodes/errors.h"
#include "pipcodes/io.h"
#include "pipcodes/twirl.h"
#include "pipcodes/verify.h"
#include "pipcodes/weight_space.h"

namespace py = pybind11;
using namespace pipcodes;

namespace {

using ClassTuple = std::tuple<int, int, int>;

WeightClass to_class(const ClassTuple &t) { return {std::get<0>(t), std::get<1>(t), std::get<2>(t)}; }
ClassTuple from_class(const WeightClass &w) { return {w.wx, w.wy, w.wz}; }

PIPChannel pip_from_dict(int n, const std::map<ClassTuple, double> &values, Rep rep) {
    ClassIndex index(n);
    PIPChannel ch{n, rep, std::vector<double>(index.size(), 0.0)};
    for (const auto &[t, v] : values) {
        ch.values[index.index_of(to_class(t))] = v;
    }
    return ch;
}

std::map<ClassTuple, double> pip_to_dict(const PIPChannel &ch) {
    ClassIndex index(ch.n);
    std::map<ClassTuple, double> out;
    for (size_t i = 0; i < index.size(); i++) {
        out[from_class(index[i])] = ch.values[i];
    }
    return out;
}

GeneralChannel general_from(const std::vector<CMatrix> &kraus) {
    if (kraus.empty()) {
        throw std::invalid_argument("need at least one Kraus operator");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < kraus[0].rows()) {
        n++;
    }
    GeneralChannel ch{n, kraus};
    ValidationReport r = validate_channel(ch);
    if (!r.valid) {
        throw ValidationError(r.issues.empty() ? "invalid channel" : r.issues.front());
    }
    return ch;
}

PauliChannel pauli_from_dict(const std::map<std::string, double> &probs) {
    if (probs.empty()) {
        throw std::invalid_argument("empty Pauli channel");
    }
    PauliChannel ch(parse_pauli(probs.begin()->first).n_qubits());
    for (const auto &[s, v] : probs) {
        ch.add(parse_pauli(s), v);
    }
    return ch;
}

py::object json_to_py(const json &doc) {
    return py::module_::import("json").attr("loads")(doc.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pauli and permutation twirling, weight-class parameter space and correctable-code search";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<CapError>(m, "CapError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<PauliOp>(m, "PauliOp")
        .def(py::init([](const std::string &text) { return parse_pauli(text); }), py::arg("text"))
        .def_property_readonly("n_qubits", &PauliOp::n_qubits)
        .def_property_readonly("phase_exp", &PauliOp::phase_exp)
        .def_property_readonly("x_mask", &PauliOp::x_mask)
        .def_property_readonly("z_mask", &PauliOp::z_mask)
        .def("phaseless", &PauliOp::phaseless)
        .def("commutes", [](const PauliOp &a, const PauliOp &b) { return commutes(a, b); })
        .def("weight_class", [](const PauliOp &p) { return from_class(weight_class(p)); })
        .def("__mul__", [](const PauliOp &a, const PauliOp &b) { return multiply(a, b); })
        .def("__eq__", [](const PauliOp &a, const PauliOp &b) { return a == b; })
        .def("__lt__", [](const PauliOp &a, const PauliOp &b) { return a < b; })
        .def("__hash__", [](const PauliOp &p) { return PauliOpHash{}(p); })
        .def("__str__", &PauliOp::str)
        .def("__repr__", [](const PauliOp &p) { return "PauliOp('" + p.str() + "')"; });

    m.def("multiply", [](const PauliOp &a, const PauliOp &b) { return multiply(a, b); });
    m.def("commutes", [](const PauliOp &a, const PauliOp &b) { return commutes(a, b); });
    m.def("class_count", &class_count, py::arg("n"));
    m.def("class_index", [](int n) {
        std::vector<ClassTuple> out;
        for (const WeightClass &w : ClassIndex(n)) {
            out.push_back(from_class(w));
        }
        return out;
    });
    m.def(
        "enumerate_class", [](int n, const ClassTuple &w) { return enumerate_class(n, to_class(w)); }, py::arg("n"),
        py::arg("w"));
    m.def(
        "anticommute_count",
        [](int n, const ClassTuple &v, const ClassTuple &w) { return anticommute_count(n, to_class(v), to_class(w)); },
        py::arg("n"), py::arg("v"), py::arg("w"));
    m.def("omega_matrix", [](int n) { return omega_matrix(n).entries; }, py::arg("n"),
          "Omega with rows = applied class v, columns = observed class w, in class_index(n) order.");

    m.def(
        "prob_to_eigen",
        [](int n, const std::map<ClassTuple, double> &p) { return pip_to_dict(to_eigen(pip_from_dict(n, p, Rep::kProb))); },
        py::arg("n"), py::arg("probs"));
    m.def(
        "eigen_to_prob",
        [](int n, const std::map<ClassTuple, double> &l) { return pip_to_dict(to_prob(pip_from_dict(n, l, Rep::kEigen))); },
        py::arg("n"), py::arg("eigenvalues"));

    m.def(
        "pauli_twirl",
        [](const std::vector<CMatrix> &kraus) {
            std::map<std::string, double> out;
            for (const auto &[p, v] : pauli_twirl(general_from(kraus)).probs) {
                out[p.str()] = v;
            }
            return out;
        },
        py::arg("kraus"));
    m.def(
        "permutation_twirl",
        [](const std::map<std::string, double> &probs) { return pip_to_dict(permutation_twirl(pauli_from_dict(probs))); },
        py::arg("probs"));

    m.def(
        "find_codes",
        [](int n, const std::map<ClassTuple, double> &probs, const std::string &mode, double tol) {
            return json_to_py(to_json(find_codes(pip_from_dict(n, probs, Rep::kProb), parse_search_mode(mode), tol)));
        },
        py::arg("n"), py::arg("probs"), py::arg("mode") = "noiseless", py::arg("tol") = kDefaultFixedTol);
    m.def(
        "synthesize",
        [](int n, const std::map<ClassTuple, double> &probs, const std::string &mode) {
            CodeReport report = find_codes(pip_from_dict(n, probs, Rep::kProb), parse_search_mode(mode));
            json doc = {
                {"encoder", to_json(synthesize_encoder(report.triplets, n))},
                {"recovery", to_json(synthesize_recovery(report))},
            };
            return json_to_py(doc);
        },
        py::arg("n"), py::arg("probs"), py::arg("mode") = "noiseless");

    m.def(
        "average_gate_fidelity", [](const std::vector<CMatrix> &kraus) { return average_gate_fidelity(general_from(kraus)); },
        py::arg("kraus"));
    m.def(
        "mc_estimate_eigenvalue",
        [](const std::vector<CMatrix> &kraus, const ClassTuple &w, int64_t samples, uint64_t seed) {
            EstimationResult r;
            {
                py::gil_scoped_release release;
                r = mc_estimate_eigenvalue(general_from(kraus), to_class(w), samples, seed);
            }
            return json_to_py(to_json(r));
        },
        py::arg("kraus"), py::arg("w"), py::arg("samples"), py::arg("seed"));

    m.def(
        "run_command",
        [](const std::vector<std::string> &args) {
            std::ostringstream out;
            std::ostringstream err;
            int code = run_command(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
