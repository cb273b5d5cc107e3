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

#include "pipcodes/io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pipcodes/errors.h"

namespace pipcodes {

namespace {

void write_value(std::ostringstream &out, const json &v, int indent, int depth) {
    auto newline = [&](int d) {
        if (indent >= 0) {
            out << '\n' << std::string(static_cast<size_t>(indent * d), ' ');
        }
    };
    switch (v.type()) {
        case json::value_t::object: {
            if (v.empty()) {
                out << "{}";
                return;
            }
            // Objects of scalars stay on one line.
            bool flat = std::all_of(v.begin(), v.end(), [](const json &e) { return e.is_primitive(); });
            out << '{';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) {
                    out << (flat && indent >= 0 ? ", " : ",");
                }
                first = false;
                if (!flat) {
                    newline(depth + 1);
                }
                out << json(it.key()).dump() << (indent >= 0 ? ": " : ":");
                write_value(out, it.value(), indent, depth + 1);
            }
            if (!flat) {
                newline(depth);
            }
            out << '}';
            return;
        }
        case json::value_t::array: {
            if (v.empty()) {
                out << "[]";
                return;
            }
            // Arrays of scalars stay on one line.
            bool flat = std::all_of(v.begin(), v.end(), [](const json &e) { return e.is_primitive(); });
            out << '[';
            bool first = true;
            for (const json &e : v) {
                if (!first) {
                    out << (flat && indent >= 0 ? ", " : ",");
                }
                first = false;
                if (!flat) {
                    newline(depth + 1);
                }
                write_value(out, e, indent, depth + 1);
            }
            if (!flat) {
                newline(depth);
            }
            out << ']';
            return;
        }
        case json::value_t::number_float: {
            double d = v.get<double>();
            if (!std::isfinite(d)) {
                out << "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%#.17g", d);
            out << buf;
            return;
        }
        default:
            out << v.dump();
    }
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from(const json &e) {
    if (e.is_number()) {
        return {e.get<double>(), 0};
    }
    if (!e.is_array() || e.size() != 2) {
        throw ParseError("complex entries must be [re, im] pairs");
    }
    return {e[0].get<double>(), e[1].get<double>()};
}

const json &require(const json &doc, const char *key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw ParseError(std::string("missing required field \"") + key + "\"");
    }
    return doc.at(key);
}

WeightClass class_from_json(const json &w) {
    if (!w.is_array() || w.size() != 3) {
        throw ParseError("weight class must be a [wx, wy, wz] triple");
    }
    return {w[0].get<int>(), w[1].get<int>(), w[2].get<int>()};
}

json class_json(const WeightClass &w) { return json::array({w.wx, w.wy, w.wz}); }

std::string defects(const ValidationReport &r) {
    std::string out;
    for (const std::string &issue : r.issues) {
        out += (out.empty() ? "" : "; ") + issue;
    }
    return out;
}

CMatrix matrix_from_json(const json &op, Eigen::Index &dim) {
    if (!op.is_array() || op.empty()) {
        throw ParseError("each Kraus operator must be a non-empty array");
    }
    std::vector<Complex> entries;
    bool nested = op[0].is_array() && !op[0].empty() && op[0][0].is_array();
    if (nested) {
        for (const json &row : op) {
            if (row.size() != op.size()) {
                throw ParseError("Kraus operator rows must form a square matrix");
            }
            for (const json &e : row) {
                entries.push_back(complex_from(e));
            }
        }
    } else {
        for (const json &e : op) {
            entries.push_back(complex_from(e));
        }
    }
    auto side = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
    if (side * side != static_cast<Eigen::Index>(entries.size())) {
        throw ParseError("Kraus operator has " + std::to_string(entries.size()) + " entries, not a square matrix");
    }
    if (dim != 0 && side != dim) {
        throw ParseError("Kraus operators have differing dimensions");
    }
    dim = side;
    CMatrix m(side, side);
    for (Eigen::Index i = 0; i < side; i++) {
        for (Eigen::Index j = 0; j < side; j++) {
            m(i, j) = entries[static_cast<size_t>(i * side + j)];
        }
    }
    return m;
}

AnyChannel channel_from_json(const json &doc, std::vector<std::string> *warnings) {
    std::string type = require(doc, "type").get<std::string>();
    if (type == "pauli") {
        const json &terms = require(doc, "terms");
        if (!terms.is_array() || terms.empty()) {
            throw ParseError("\"terms\" must be a non-empty array");
        }
        int n = doc.contains("n") ? doc["n"].get<int>() : 0;
        PauliChannel ch(n > 0 ? n : 1);
        bool sized = n > 0;
        for (const json &term : terms) {
            PauliOp p = [&] {
                try {
                    return parse_pauli(require(term, "pauli").get<std::string>());
                } catch (const std::invalid_argument &e) {
                    throw ParseError(e.what());
                }
            }();
            if (!sized) {
                ch.n = p.n_qubits();
                sized = true;
            }
            if (p.n_qubits() != ch.n) {
                throw ParseError("term " + p.str() + " does not have " + std::to_string(ch.n) + " qubits");
            }
            if (!ch.add(p, require(term, "prob").get<double>()) && warnings != nullptr) {
                warnings->push_back("phase stripped from Pauli term " + p.str());
            }
        }
        ValidationReport r = validate_channel(ch);
        if (!r.valid) {
            throw ValidationError("invalid Pauli channel: " + defects(r));
        }
        for (auto &[p, v] : ch.probs) {
            v = std::max(v, 0.0);
        }
        return ch;
    }
    if (type == "kraus") {
        const json &ops = require(doc, "ops");
        if (!ops.is_array() || ops.empty()) {
            throw ParseError("\"ops\" must be a non-empty array");
        }
        Eigen::Index dim = 0;
        GeneralChannel ch;
        for (const json &op : ops) {
            ch.kraus.push_back(matrix_from_json(op, dim));
        }
        int n = 0;
        while ((Eigen::Index{1} << n) < dim) {
            n++;
        }
        if ((Eigen::Index{1} << n) != dim || n < 1) {
            throw ParseError("Kraus dimension " + std::to_string(dim) + " is not 2^n for n >= 1");
        }
        if (doc.contains("n") && doc["n"].get<int>() != n) {
            throw ParseError("\"n\" does not match the Kraus operator dimension");
        }
        ch.n = n;
        ValidationReport r = validate_channel(ch);
        if (!r.valid) {
            throw ValidationError("invalid Kraus channel: " + defects(r));
        }
        return ch;
    }
    if (type == "pip") {
        int n = require(doc, "n").get<int>();
        if (n < 1 || n > kMaxQubits) {
            throw ParseError("\"n\" out of range");
        }
        std::string rep = require(doc, "rep").get<std::string>();
        PIPChannel ch{n, Rep::kProb, {}};
        if (rep == "prob") {
            ch.rep = Rep::kProb;
        } else if (rep == "eigen") {
            ch.rep = Rep::kEigen;
        } else {
            throw ParseError("\"rep\" must be \"prob\" or \"eigen\", got \"" + rep + "\"");
        }
        ClassIndex index(n);
        ch.values.assign(index.size(), 0.0);
        std::vector<bool> seen(index.size(), false);
        for (const json &entry : require(doc, "classes")) {
            WeightClass w = class_from_json(require(entry, "w"));
            size_t i = 0;
            try {
                i = index.index_of(w);
            } catch (const std::invalid_argument &e) {
                throw ParseError(e.what());
            }
            if (seen[i]) {
                throw ParseError("class " + w.str() + " listed twice");
            }
            seen[i] = true;
            ch.values[i] = require(entry, "value").get<double>();
        }
        if (ch.rep == Rep::kEigen) {
            for (size_t i = 0; i < index.size(); i++) {
                if (!seen[i]) {
                    throw ParseError("eigen-rep PIP channel is missing class " + index[i].str());
                }
            }
        }
        ValidationReport r = validate_channel(ch);
        if (!r.valid) {
            throw ValidationError("invalid PIP channel: " + defects(r));
        }
        return ch;
    }
    throw ParseError("unknown channel type \"" + type + "\" (expected pauli, kraus or pip)");
}

std::string line_col(const std::string &text, size_t byte) {
    size_t line = 1;
    size_t col = 1;
    for (size_t i = 0; i + 1 < byte && i < text.size(); i++) {
        if (text[i] == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_text(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError("JSON syntax error at " + line_col(text, e.byte) + ": " + e.what());
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <typename Fn>
auto with_schema_errors(Fn &&fn) {
    try {
        return fn();
    } catch (const json::exception &e) {
        throw ParseError(std::string("schema error: ") + e.what());
    }
}

}  // namespace

std::string dump_json(const json &value, int indent) {
    std::ostringstream out;
    write_value(out, value, indent, 0);
    return out.str();
}

AnyChannel parse_channel(const std::string &text, std::vector<std::string> *warnings) {
    json doc = parse_text(text);
    return with_schema_errors([&] { return channel_from_json(doc, warnings); });
}

AnyChannel load_channel(const std::string &path, std::vector<std::string> *warnings) {
    return parse_channel(read_file(path), warnings);
}

json to_json(const GeneralChannel &ch) {
    json ops = json::array();
    for (const CMatrix &a : ch.kraus) {
        json entries = json::array();
        for (Eigen::Index i = 0; i < a.rows(); i++) {
            for (Eigen::Index j = 0; j < a.cols(); j++) {
                entries.push_back(complex_json(a(i, j)));
            }
        }
        ops.push_back(entries);
    }
    return {{"type", "kraus"}, {"n", ch.n}, {"ops", ops}};
}

json to_json(const PauliChannel &ch) {
    json terms = json::array();
    for (const auto &[p, v] : ch.probs) {
        terms.push_back({{"pauli", p.str()}, {"prob", v}});
    }
    return {{"type", "pauli"}, {"n", ch.n}, {"terms", terms}};
}

json to_json(const PIPChannel &ch) {
    ClassIndex index(ch.n);
    json classes = json::array();
    for (size_t i = 0; i < index.size(); i++) {
        classes.push_back({{"w", class_json(index[i])}, {"value", ch.values.at(i)}});
    }
    return {{"type", "pip"}, {"n", ch.n}, {"rep", rep_name(ch.rep)}, {"classes", classes}};
}

json to_json(const AnyChannel &ch) {
    return std::visit([](const auto &c) { return to_json(c); }, ch);
}

json to_json(const CliffordCircuit &circ) {
    json gates = json::array();
    for (const Gate &g : circ.gates) {
        if (g.kind == GateKind::kCnot) {
            gates.push_back({{"g", "CNOT"}, {"c", g.control}, {"t", g.target}});
        } else {
            gates.push_back({{"g", g.name()}, {"q", g.target}});
        }
    }
    return {{"n", circ.n}, {"gates", gates}};
}

CliffordCircuit circuit_from_json(const json &doc) {
    return with_schema_errors([&] {
        CliffordCircuit circ{require(doc, "n").get<int>(), {}};
        for (const json &g : require(doc, "gates")) {
            std::string name = require(g, "g").get<std::string>();
            try {
                if (name == "CNOT") {
                    circ.append(Gate::cnot(require(g, "c").get<int>(), require(g, "t").get<int>()));
                } else if (name == "H") {
                    circ.append(Gate::h(require(g, "q").get<int>()));
                } else if (name == "S") {
                    circ.append(Gate::s(require(g, "q").get<int>()));
                } else if (name == "X" || name == "Y" || name == "Z") {
                    circ.append(Gate::pauli(name[0], require(g, "q").get<int>()));
                } else {
                    throw ParseError("unknown gate \"" + name + "\"");
                }
            } catch (const std::invalid_argument &e) {
                throw ParseError(e.what());
            }
        }
        return circ;
    });
}

json to_json(const CodeReport &report) {
    json classes = json::array();
    for (const FixedClass &c : report.fixed_classes) {
        classes.push_back({{"w", class_json(c.w)}, {"sign", c.sign}, {"eigenvalue", c.eigenvalue}});
    }
    json paulis = json::array();
    for (const FixedPauli &p : report.fixed_paulis) {
        paulis.push_back({{"pauli", p.op.str()}, {"sign", p.sign}});
    }
    json triplets = json::array();
    for (const Triplet &t : report.triplets) {
        triplets.push_back({{"x", t.x_op.str()}, {"y", t.y_op.str()}, {"z", t.z_op.str()}});
    }
    json residual = json::array();
    for (const PauliOp &p : report.residual) {
        residual.push_back(p.str());
    }
    return {
        {"n", report.n},
        {"mode", search_mode_name(report.mode)},
        {"tol", report.tol},
        {"logical_qubits", report.logical_qubits},
        {"summary", report.summary()},
        {"triplets", triplets},
        {"fixed_classes", classes},
        {"fixed_paulis", paulis},
        {"residual", residual},
        {"channel", to_json(report.channel)},
    };
}

CodeReport code_report_from_json(const json &doc) {
    return with_schema_errors([&] {
        CodeReport r;
        r.n = require(doc, "n").get<int>();
        try {
            r.mode = parse_search_mode(require(doc, "mode").get<std::string>());
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what());
        }
        r.tol = doc.value("tol", kDefaultFixedTol);
        AnyChannel ch = channel_from_json(require(doc, "channel"), nullptr);
        if (!std::holds_alternative<PIPChannel>(ch)) {
            throw ParseError("code report channel must be a pip document");
        }
        r.channel = to_eigen(std::get<PIPChannel>(ch));
        for (const json &c : require(doc, "fixed_classes")) {
            r.fixed_classes.push_back(
                {class_from_json(require(c, "w")), require(c, "sign").get<int>(), require(c, "eigenvalue").get<double>()});
        }
        auto pauli = [](const json &s) {
            try {
                return parse_pauli(s.get<std::string>());
            } catch (const std::invalid_argument &e) {
                throw ParseError(e.what());
            }
        };
        for (const json &p : require(doc, "fixed_paulis")) {
            r.fixed_paulis.push_back({pauli(require(p, "pauli")), require(p, "sign").get<int>()});
        }
        for (const json &t : require(doc, "triplets")) {
            Triplet trip{pauli(require(t, "x")), pauli(require(t, "y")), pauli(require(t, "z"))};
            if (!trip.satisfies_su2()) {
                throw ValidationError("triplet " + trip.str() + " does not satisfy the su(2) relations");
            }
            r.triplets.push_back(trip);
        }
        for (const json &p : require(doc, "residual")) {
            r.residual.push_back(pauli(p));
        }
        r.logical_qubits = static_cast<int>(r.triplets.size());
        if (doc.contains("logical_qubits") && doc["logical_qubits"].get<int>() != r.logical_qubits) {
            throw ValidationError("logical_qubits does not match the triplet count");
        }
        return r;
    });
}

CodeReport load_code_report(const std::string &path) { return code_report_from_json(parse_text(read_file(path))); }

json to_json(const FidelityReport &report) {
    json kraus = json::array();
    for (const KrausDiagnostic &k : report.kraus) {
        kraus.push_back({{"weight", k.weight}, {"identity_overlap", k.identity_overlap}});
    }
    return {
        {"code", report.code},
        {"channel", report.channel},
        {"logical_qubits", report.logical_qubits},
        {"avg_gate_fidelity", report.avg_gate_fidelity},
        {"twirled_avg_gate_fidelity", report.twirled_avg_gate_fidelity},
        {"worst_case_over_probes", report.worst_case_over_probes},
        {"theorem_violation", report.theorem_violation},
        {"kraus", kraus},
    };
}

json to_json(const EstimationResult &result) {
    return {
        {"class", class_json(result.w)},
        {"estimate", result.estimate},
        {"std_error", result.std_error},
        {"samples", result.samples},
        {"seed", result.seed},
    };
}

json to_json(const OmegaMatrix &omega) {
    ClassIndex index(omega.n);
    json labels = json::array();
    for (const WeightClass &w : index) {
        labels.push_back(w.str());
    }
    json rows = json::array();
    for (size_t i = 0; i < index.size(); i++) {
        json entries = json::array();
        for (size_t j = 0; j < index.size(); j++) {
            entries.push_back(omega.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
        }
        rows.push_back({{"v", class_json(index[i])}, {"entries", entries}});
    }
    return {{"n", omega.n}, {"columns", labels}, {"rows", rows}};
}

std::string omega_csv(const OmegaMatrix &omega) {
    ClassIndex index(omega.n);
    std::ostringstream out;
    out << "v\\w";
    for (const WeightClass &w : index) {
        out << ",\"" << w.str() << "\"";
    }
    out << '\n';
    char buf[40];
    for (size_t i = 0; i < index.size(); i++) {
        out << '"' << index[i].str() << '"';
        for (size_t j = 0; j < index.size(); j++) {
            std::snprintf(
                buf, sizeof(buf), "%#.17g", omega.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
            out << ',' << buf;
        }
        out << '\n';
    }
    return out.str();
}

WeightClass parse_weight_class(const std::string &text) {
    WeightClass w;
    char c1 = 0;
    char c2 = 0;
    std::istringstream in(text);
    if (!(in >> w.wx >> c1 >> w.wy >> c2 >> w.wz) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof()) {
        throw ParseError("weight class must look like wx,wy,wz; got \"" + text + "\"");
    }
    if (w.wx < 0 || w.wy < 0 || w.wz < 0) {
        throw ParseError("weight class entries must be non-negative");
    }
    return w;
}

}  // namespace pipcodes
