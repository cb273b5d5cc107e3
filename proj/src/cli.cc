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

#include "pipcodes/cli.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "pipcodes/errors.h"
#include "pipcodes/io.h"
#include "pipcodes/twirl.h"

namespace pipcodes {

namespace {

struct Options {
    int dense_cap = kDenseMaxQubits;
    std::string input;
    std::string second_input;
    std::string output;
    std::string group = "both";
    int n = 0;
    std::string format = "table";
    std::string mode = "noiseless";
    double tol = kDefaultFixedTol;
    int expansion_cap = kDefaultExpansionCap;
    bool json_only = false;
    std::string klass;
    int64_t samples = 0;
    uint64_t seed = 0;
    std::string readout = "shot";
};

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw ParseError("cannot write " + path);
    }
    file << text;
}

PIPChannel to_pip(const AnyChannel &ch, int cap) {
    if (const auto *g = std::get_if<GeneralChannel>(&ch)) {
        return pip_twirl(*g, cap);
    }
    if (const auto *p = std::get_if<PauliChannel>(&ch)) {
        return permutation_twirl(*p);
    }
    return std::get<PIPChannel>(ch);
}

GeneralChannel to_dense(const AnyChannel &ch) {
    if (const auto *g = std::get_if<GeneralChannel>(&ch)) {
        return *g;
    }
    if (const auto *p = std::get_if<PauliChannel>(&ch)) {
        return to_general(*p);
    }
    return to_general(expand_pip(std::get<PIPChannel>(ch)));
}

int channel_qubits(const AnyChannel &ch) {
    return std::visit([](const auto &c) { return c.n; }, ch);
}

AnyChannel load_reporting(const std::string &path, std::ostream &err) {
    std::vector<std::string> warnings;
    AnyChannel ch = load_channel(path, &warnings);
    for (const std::string &w : warnings) {
        err << "warning: " << w << '\n';
    }
    return ch;
}

std::string fixed_line(const CodeReport &r) {
    std::string out;
    for (const FixedClass &c : r.fixed_classes) {
        out += (out.empty() ? "" : " ") + c.w.str() + (c.sign > 0 ? "+" : "-");
    }
    return out;
}

int cmd_twirl(const Options &o, std::ostream &out, std::ostream &err) {
    AnyChannel ch = load_reporting(o.input, err);
    TwirlGroup group = parse_twirl_group(o.group);
    AnyChannel result = ch;
    if (const auto *g = std::get_if<GeneralChannel>(&ch)) {
        switch (group) {
            case TwirlGroup::kPauli:
                result = pauli_twirl(*g, o.dense_cap);
                break;
            case TwirlGroup::kPermutation:
                result = brute_force_twirl(*g, TwirlGroup::kPermutation);
                break;
            case TwirlGroup::kBoth:
                result = pip_twirl(*g, o.dense_cap);
                break;
        }
    } else if (const auto *p = std::get_if<PauliChannel>(&ch)) {
        if (group != TwirlGroup::kPauli) {
            result = permutation_twirl(*p);
        }
    }
    write_output(o.output, dump_json(to_json(result)) + "\n", out);
    return kExitOk;
}

int cmd_omega(const Options &o, std::ostream &out) {
    OmegaMatrix omega = omega_matrix(o.n);
    std::string format = o.format;
    if (!o.output.empty() && format == "table") {
        format = o.output.ends_with(".json") ? "json" : "csv";
    }
    if (format == "csv") {
        write_output(o.output, omega_csv(omega), out);
    } else if (format == "json") {
        write_output(o.output, dump_json(to_json(omega)) + "\n", out);
    } else {
        ClassIndex index(o.n);
        std::ostringstream table;
        table << std::setw(10) << "v \\ w";
        for (const WeightClass &w : index) {
            table << std::setw(10) << w.str();
        }
        table << '\n';
        for (size_t i = 0; i < index.size(); i++) {
            table << std::setw(10) << index[i].str();
            for (size_t j = 0; j < index.size(); j++) {
                table << std::setw(10) << std::setprecision(6)
                      << omega.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
            table << '\n';
        }
        write_output(o.output, table.str(), out);
    }
    return kExitOk;
}

int cmd_find_codes(const Options &o, std::ostream &out, std::ostream &err) {
    AnyChannel ch = load_reporting(o.input, err);
    PIPChannel pip = to_pip(ch, o.dense_cap);
    CodeReport report = find_codes(pip, parse_search_mode(o.mode), o.tol, o.expansion_cap);
    std::string doc = dump_json(to_json(report)) + "\n";
    if (o.json_only) {
        out << doc;
        return kExitOk;
    }
    if (!o.output.empty()) {
        write_output(o.output, doc, out);
    }
    out << "mode: " << search_mode_name(report.mode) << "  n=" << report.n << "  tol=" << report.tol << '\n';
    out << "fixed classes: " << fixed_line(report) << '\n';
    out << "fixed Paulis (" << report.fixed_paulis.size() << "):";
    for (const FixedPauli &p : report.fixed_paulis) {
        out << ' ' << p.op.str() << (report.mode == SearchMode::kUcs ? (p.sign > 0 ? "+" : "-") : "");
    }
    out << '\n';
    if (!report.triplets.empty()) {
        out << "slot  X          Y          Z\n";
        for (size_t i = 0; i < report.triplets.size(); i++) {
            const Triplet &t = report.triplets[i];
            out << std::left << std::setw(6) << (i + 1) << std::setw(11) << t.x_op.str() << std::setw(11)
                << t.y_op.str() << t.z_op.str() << std::right << '\n';
        }
    }
    out << "residual:";
    for (const PauliOp &p : report.residual) {
        out << ' ' << p.str();
    }
    out << '\n' << report.summary() << '\n';
    return kExitOk;
}

int cmd_synth(const Options &o, std::ostream &out) {
    CodeReport report = load_code_report(o.input);
    CliffordCircuit encoder = synthesize_encoder(report.triplets, report.n);
    CliffordCircuit recovery = synthesize_recovery(report);
    json checks = json::array();
    for (size_t i = 0; i < report.triplets.size(); i++) {
        int q = static_cast<int>(i) + 1;
        checks.push_back({
            {"slot", q},
            {"X", conjugate_pauli(encoder, PauliOp::single(report.n, q, 'X')).str()},
            {"Z", conjugate_pauli(encoder, PauliOp::single(report.n, q, 'Z')).str()},
        });
    }
    json doc = {
        {"n", report.n},
        {"logical_qubits", report.logical_qubits},
        {"encoder", to_json(encoder)},
        {"recovery", to_json(recovery)},
        {"recovery_pauli", pauli_layer_operator(recovery).str()},
        {"checks", checks},
    };
    write_output(o.output, dump_json(doc) + "\n", out);
    return kExitOk;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &err) {
    AnyChannel original = load_reporting(o.input, err);
    CodeReport report = load_code_report(o.second_input);
    if (channel_qubits(original) != report.n) {
        throw ValidationError("channel and code report qubit counts differ");
    }
    CliffordCircuit encoder = synthesize_encoder(report.triplets, report.n);
    CliffordCircuit recovery = synthesize_recovery(report);
    FidelityReport fid = verify_code(to_dense(original), report, encoder, recovery, o.dense_cap);
    if (fid.theorem_violation) {
        err << "COUNTEREXAMPLE: code verifies on the twirled channel (F=" << fid.twirled_avg_gate_fidelity
            << ") but not on the original (F=" << fid.avg_gate_fidelity << ")\n";
    }
    write_output(o.output, dump_json(to_json(fid)) + "\n", out);
    return kExitOk;
}

int cmd_estimate(const Options &o, std::ostream &out, std::ostream &err) {
    AnyChannel ch = load_reporting(o.input, err);
    WeightClass w = parse_weight_class(o.klass);
    Readout readout = Readout::kSingleShot;
    if (o.readout == "exact") {
        readout = Readout::kExpectation;
    } else if (o.readout != "shot") {
        throw ParseError("--readout must be shot or exact");
    }
    EstimationResult r = mc_estimate_eigenvalue(to_dense(ch), w, o.samples, o.seed, readout, o.dense_cap);
    write_output(o.output, dump_json(to_json(r)) + "\n", out);
    return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Twirled-channel characterization and correctable-code search", "pipcodes"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--dense-cap", o.dense_cap, "Largest qubit count for dense matrix work")->capture_default_str();

    auto *twirl = app.add_subcommand("twirl", "Twirl a channel file");
    twirl->add_option("input", o.input, "Channel JSON")->required();
    twirl->add_option("--group", o.group, "pauli, perm or both")->capture_default_str();
    twirl->add_option("-o,--output", o.output, "Output channel JSON (default stdout)");

    auto *omega = app.add_subcommand("omega", "Print the Omega matrix with class labels");
    omega->add_option("--n", o.n, "Qubit count")->required()->check(CLI::PositiveNumber);
    omega->add_option("-o,--output", o.output, "Output file (.csv or .json)");
    omega->add_option("--format", o.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();

    auto *find = app.add_subcommand("find-codes", "Search for noiseless or unitarily correctable codes");
    find->add_option("input", o.input, "Channel JSON")->required();
    find->add_option("--mode", o.mode, "noiseless or ucs")->capture_default_str();
    find->add_option("--tol", o.tol, "Eigenvalue tolerance")->capture_default_str();
    find->add_option("--cap", o.expansion_cap, "Largest qubit count for fixed-set expansion")->capture_default_str();
    find->add_option("-o,--output", o.output, "Write the code report JSON here");
    find->add_flag("--json", o.json_only, "Print only the code report JSON");

    auto *synth = app.add_subcommand("synth", "Synthesize encoder and recovery circuits");
    synth->add_option("report", o.input, "Code report JSON")->required();
    synth->add_option("-o,--output", o.output, "Output JSON (default stdout)");

    auto *verify = app.add_subcommand("verify", "Dense logical fidelity of a code under a channel");
    verify->add_option("original", o.input, "Channel JSON")->required();
    verify->add_option("report", o.second_input, "Code report JSON")->required();
    verify->add_option("-o,--output", o.output, "Output JSON (default stdout)");

    auto *estimate = app.add_subcommand("estimate", "Simulate the class-eigenvalue estimation experiment");
    estimate->add_option("input", o.input, "Channel JSON")->required();
    estimate->add_option("--class", o.klass, "Weight class wx,wy,wz")->required();
    estimate->add_option("--samples", o.samples, "Number of samples")->required();
    estimate->add_option("--seed", o.seed, "RNG seed")->required();
    estimate->add_option("--readout", o.readout, "shot or exact")->capture_default_str();
    estimate->add_option("-o,--output", o.output, "Output JSON (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (twirl->parsed()) {
            return cmd_twirl(o, out, err);
        }
        if (omega->parsed()) {
            return cmd_omega(o, out);
        }
        if (find->parsed()) {
            return cmd_find_codes(o, out, err);
        }
        if (synth->parsed()) {
            return cmd_synth(o, out);
        }
        if (verify->parsed()) {
            return cmd_verify(o, out, err);
        }
        if (estimate->parsed()) {
            return cmd_estimate(o, out, err);
        }
    } catch (const CapError &e) {
        err << "error: resource cap: " << e.what() << '\n';
        return kExitCap;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ValidationError &e) {
        err << "error: validation failed: " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericalError &e) {
        err << "error: numerical failure: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitUsage;
}

}  // namespace pipcodes
