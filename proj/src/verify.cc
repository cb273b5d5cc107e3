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

#include "pipcodes/verify.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "pipcodes/errors.h"
#include "pipcodes/twirl.h"

namespace pipcodes {

namespace {

const double kInvSqrt2 = 1 / std::sqrt(2.0);

CMatrix single_qubit_gate(GateKind kind) {
    CMatrix g(2, 2);
    const Complex i(0, 1);
    switch (kind) {
        case GateKind::kH:
            g << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
            break;
        case GateKind::kS:
            g << 1, 0, 0, i;
            break;
        case GateKind::kX:
            g << 0, 1, 1, 0;
            break;
        case GateKind::kY:
            g << 0, -i, i, 0;
            break;
        case GateKind::kZ:
            g << 1, 0, 0, -1;
            break;
        case GateKind::kCnot:
            throw std::logic_error("CNOT is not a single-qubit gate");
    }
    return g;
}

CMatrix gate_unitary(const Gate &g, int n) {
    auto dim = Eigen::Index{1} << n;
    if (g.kind == GateKind::kCnot) {
        CMatrix u = CMatrix::Zero(dim, dim);
        Eigen::Index cbit = Eigen::Index{1} << (n - g.control);
        Eigen::Index tbit = Eigen::Index{1} << (n - g.target);
        for (Eigen::Index j = 0; j < dim; j++) {
            u((j & cbit) ? (j ^ tbit) : j, j) = 1;
        }
        return u;
    }
    CMatrix left = CMatrix::Identity(Eigen::Index{1} << (g.target - 1), Eigen::Index{1} << (g.target - 1));
    CMatrix right = CMatrix::Identity(Eigen::Index{1} << (n - g.target), Eigen::Index{1} << (n - g.target));
    return kron(kron(left, single_qubit_gate(g.kind)), right);
}

CMatrix basis_operator(Eigen::Index dim, Eigen::Index a, Eigen::Index b) {
    CMatrix m = CMatrix::Zero(dim, dim);
    m(a, b) = 1;
    return m;
}

// Eigenvector of a single-qubit Pauli letter with eigenvalue sign.
CVector letter_eigenstate(char letter, int sign) {
    CVector v(2);
    const Complex i(0, 1);
    switch (letter) {
        case 'X':
            v << kInvSqrt2, sign * kInvSqrt2;
            break;
        case 'Y':
            v << kInvSqrt2, sign * kInvSqrt2 * i;
            break;
        default:
            // Z (and identity positions, which use Z eigenstates)
            if (sign > 0) {
                v << 1, 0;
            } else {
                v << 0, 1;
            }
            break;
    }
    return v;
}

std::string describe(const CodeReport &report) {
    if (report.triplets.empty()) {
        return std::string(search_mode_name(report.mode)) + ": no triplets";
    }
    std::string out = search_mode_name(report.mode);
    out += ":";
    for (const Triplet &t : report.triplets) {
        out += " " + t.str();
    }
    return out;
}

double worst_probe_fidelity(const GeneralChannel &logical) {
    int k = logical.n;
    static const char kLetters[3] = {'X', 'Y', 'Z'};
    double worst = 1;
    auto total = static_cast<int64_t>(std::pow(6, k));
    for (int64_t code = 0; code < total; code++) {
        int64_t rest = code;
        CVector psi = CVector::Ones(1);
        for (int q = 0; q < k; q++) {
            int c = static_cast<int>(rest % 6);
            rest /= 6;
            CVector single = letter_eigenstate(kLetters[c / 2], (c % 2) ? -1 : 1);
            CVector next(psi.size() * 2);
            for (Eigen::Index a = 0; a < psi.size(); a++) {
                next.segment(a * 2, 2) = psi(a) * single;
            }
            psi = next;
        }
        double f = 0;
        for (const CMatrix &a : logical.kraus) {
            f += std::norm(psi.dot(a * psi));
        }
        worst = std::min(worst, f);
    }
    return worst;
}

struct StreamTotals {
    double sum = 0;
    double sum_sq = 0;
    int64_t count = 0;
};

StreamTotals run_stream(
    const GeneralChannel &ch, const WeightClass &w, int64_t count, uint64_t seed, int stream, Readout readout) {
    int n = ch.n;
    std::seed_seq seq{
        static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(stream),
        0x70697063u};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<char> letters;
    letters.insert(letters.end(), static_cast<size_t>(w.wx), 'X');
    letters.insert(letters.end(), static_cast<size_t>(w.wy), 'Y');
    letters.insert(letters.end(), static_cast<size_t>(w.wz), 'Z');
    letters.insert(letters.end(), static_cast<size_t>(n - w.total()), 'I');

    StreamTotals totals;
    for (int64_t s = 0; s < count; s++) {
        for (size_t i = letters.size() - 1; i > 0; i--) {
            std::uniform_int_distribution<size_t> pick(0, i);
            std::swap(letters[i], letters[pick(rng)]);
        }
        std::string text(letters.begin(), letters.end());
        PauliOp p = parse_pauli(text);

        int input_sign = 1;
        CVector psi = CVector::Ones(1);
        for (char letter : letters) {
            int sign = unit(rng) < 0.5 ? 1 : -1;
            if (letter != 'I') {
                input_sign *= sign;
            }
            CVector single = letter_eigenstate(letter, sign);
            CVector next(psi.size() * 2);
            for (Eigen::Index a = 0; a < psi.size(); a++) {
                next.segment(a * 2, 2) = psi(a) * single;
            }
            psi = next;
        }

        double expectation = 0;
        for (const CMatrix &a : ch.kraus) {
            CVector phi = a * psi;
            expectation += phi.dot(apply_pauli(p, phi)).real();
        }
        double value = expectation;
        if (readout == Readout::kSingleShot) {
            value = unit(rng) < (1 + expectation) / 2 ? 1.0 : -1.0;
        }
        value *= input_sign;
        totals.sum += value;
        totals.sum_sq += value * value;
        totals.count++;
    }
    return totals;
}

}  // namespace

DensityMatrix DensityMatrix::pure(int n, const CVector &psi) { return {n, psi * psi.adjoint()}; }

DensityMatrix DensityMatrix::maximally_mixed(int n) {
    auto dim = Eigen::Index{1} << n;
    return {n, CMatrix::Identity(dim, dim) / static_cast<double>(dim)};
}

bool DensityMatrix::is_valid() const {
    if (entries.rows() != entries.cols() || entries.rows() != (Eigen::Index{1} << n)) {
        return false;
    }
    if ((entries - entries.adjoint()).norm() > 1e-10) {
        return false;
    }
    if (std::abs(entries.trace() - Complex(1, 0)) > 1e-10) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -1e-9;
}

CMatrix circuit_unitary(const CliffordCircuit &circ, int cap) {
    check_dense_cap(circ.n, cap, "circuit_unitary");
    auto dim = Eigen::Index{1} << circ.n;
    CMatrix u = CMatrix::Identity(dim, dim);
    for (const Gate &g : circ.gates) {
        u = gate_unitary(g, circ.n) * u;
    }
    return u;
}

DensityMatrix apply_channel(const GeneralChannel &ch, const DensityMatrix &rho, int cap) {
    check_dense_cap(ch.n, cap, "apply_channel");
    if (ch.n != rho.n) {
        throw std::invalid_argument("apply_channel: qubit count mismatch");
    }
    DensityMatrix out{ch.n, CMatrix::Zero(rho.entries.rows(), rho.entries.cols())};
    for (const CMatrix &a : ch.kraus) {
        out.entries += a * rho.entries * a.adjoint();
    }
    return out;
}

DensityMatrix apply_channel(const PauliChannel &ch, const DensityMatrix &rho, int cap) {
    return apply_channel(to_general(ch), rho, cap);
}

GeneralChannel logical_channel(
    const GeneralChannel &ch, const CliffordCircuit &encoder, const CliffordCircuit &recovery, int k, int cap) {
    check_dense_cap(ch.n, cap, "logical_channel");
    if (k < 1 || k > ch.n) {
        throw std::invalid_argument("logical_channel: need 1 <= k <= n, got k=" + std::to_string(k));
    }
    if (encoder.n != ch.n || recovery.n != ch.n) {
        throw std::invalid_argument("logical_channel: circuit and channel qubit counts differ");
    }
    CMatrix e = circuit_unitary(encoder, cap);
    CMatrix r = circuit_unitary(recovery, cap);
    std::vector<CMatrix> effective;
    effective.reserve(ch.kraus.size());
    for (const CMatrix &a : ch.kraus) {
        effective.push_back(e.adjoint() * r * a * e);
    }

    auto dl = Eigen::Index{1} << k;
    auto db = Eigen::Index{1} << (ch.n - k);
    CMatrix gauge = CMatrix::Identity(db, db) / static_cast<double>(db);
    CMatrix choi = CMatrix::Zero(dl * dl, dl * dl);
    for (Eigen::Index a = 0; a < dl; a++) {
        for (Eigen::Index b = 0; b < dl; b++) {
            CMatrix in = kron(basis_operator(dl, a, b), gauge);
            CMatrix out = CMatrix::Zero(in.rows(), in.cols());
            for (const CMatrix &m : effective) {
                out += m * in * m.adjoint();
            }
            CMatrix reduced = CMatrix::Zero(dl, dl);
            for (Eigen::Index i = 0; i < dl; i++) {
                for (Eigen::Index j = 0; j < dl; j++) {
                    for (Eigen::Index beta = 0; beta < db; beta++) {
                        reduced(i, j) += out(i * db + beta, j * db + beta);
                    }
                }
            }
            choi.block(a * dl, b * dl, dl, dl) = reduced;
        }
    }

    Eigen::SelfAdjointEigenSolver<CMatrix> solver(choi);
    GeneralChannel logical{k, {}};
    for (Eigen::Index m = 0; m < choi.rows(); m++) {
        double lambda = solver.eigenvalues()(m);
        if (lambda <= 1e-12) {
            continue;
        }
        CVector v = solver.eigenvectors().col(m);
        CMatrix op(dl, dl);
        for (Eigen::Index in = 0; in < dl; in++) {
            for (Eigen::Index out = 0; out < dl; out++) {
                op(out, in) = std::sqrt(lambda) * v(in * dl + out);
            }
        }
        logical.kraus.push_back(op);
    }
    return logical;
}

double entanglement_fidelity(const GeneralChannel &ch) {
    double dim = std::ldexp(1.0, ch.n);
    double fe = 0;
    for (const CMatrix &a : ch.kraus) {
        fe += std::norm(a.trace() / dim);
    }
    return fe;
}

double average_gate_fidelity(const GeneralChannel &ch) {
    double dim = std::ldexp(1.0, ch.n);
    return (dim * entanglement_fidelity(ch) + 1) / (dim + 1);
}

FidelityReport verify_code(
    const GeneralChannel &original, const CodeReport &report, const CliffordCircuit &encoder,
    const CliffordCircuit &recovery, int cap) {
    check_dense_cap(original.n, cap, "verify_code");
    if (report.logical_qubits < 1) {
        throw ValidationError("verify_code: the code report has no logical qubits");
    }
    if (report.n != original.n) {
        throw std::invalid_argument("verify_code: code and channel qubit counts differ");
    }
    int k = report.logical_qubits;
    FidelityReport out;
    out.code = describe(report);
    out.channel = std::to_string(original.n) + "-qubit channel, " + std::to_string(original.kraus.size()) + " Kraus ops";
    out.logical_qubits = k;

    GeneralChannel logical = logical_channel(original, encoder, recovery, k, cap);
    out.avg_gate_fidelity = average_gate_fidelity(logical);
    out.worst_case_over_probes = worst_probe_fidelity(logical);
    double dl = std::ldexp(1.0, k);
    for (const CMatrix &a : logical.kraus) {
        out.kraus.push_back({(a.adjoint() * a).trace().real() / dl, std::norm(a.trace() / dl)});
    }

    GeneralChannel twirled = to_general(expand_pip(pip_twirl(original, cap)));
    out.twirled_avg_gate_fidelity = average_gate_fidelity(logical_channel(twirled, encoder, recovery, k, cap));
    out.theorem_violation = out.twirled_avg_gate_fidelity >= kVerifyThreshold && out.avg_gate_fidelity < kVerifyThreshold;
    return out;
}

EstimationResult mc_estimate_eigenvalue(
    const GeneralChannel &ch, const WeightClass &w, int64_t samples, uint64_t seed, Readout readout, int cap) {
    check_dense_cap(ch.n, cap, "mc_estimate_eigenvalue");
    if (samples < 2) {
        throw std::invalid_argument("mc_estimate_eigenvalue: need at least 2 samples, got " + std::to_string(samples));
    }
    if (!w.fits(ch.n)) {
        throw std::invalid_argument("class " + w.str() + " is not valid on " + std::to_string(ch.n) + " qubits");
    }
    std::vector<StreamTotals> totals(kEstimatorStreams);
    std::vector<std::thread> workers;
    for (int s = 0; s < kEstimatorStreams; s++) {
        int64_t count = samples / kEstimatorStreams + (s < samples % kEstimatorStreams ? 1 : 0);
        workers.emplace_back([&, s, count] { totals[static_cast<size_t>(s)] = run_stream(ch, w, count, seed, s, readout); });
    }
    for (std::thread &t : workers) {
        t.join();
    }
    double sum = 0;
    double sum_sq = 0;
    for (const StreamTotals &t : totals) {
        sum += t.sum;
        sum_sq += t.sum_sq;
    }
    auto m = static_cast<double>(samples);
    double mean = sum / m;
    double variance = std::max(0.0, (sum_sq - m * mean * mean) / (m - 1));
    return {w, mean, std::sqrt(variance / m), samples, seed};
}

EstimationResult mc_estimate_eigenvalue(
    const PauliChannel &ch, const WeightClass &w, int64_t samples, uint64_t seed, Readout readout, int cap) {
    return mc_estimate_eigenvalue(to_general(ch), w, samples, seed, readout, cap);
}

}  // namespace pipcodes
