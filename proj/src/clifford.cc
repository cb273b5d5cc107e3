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

#include "pipcodes/clifford.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "pipcodes/errors.h"

namespace pipcodes {

namespace {

uint64_t bit(int q) { return uint64_t{1} << (q - 1); }

void check_qubit(int n, int q) {
    if (q < 1 || q > n) {
        throw std::invalid_argument("qubit " + std::to_string(q) + " out of range for " + std::to_string(n) + " qubits");
    }
}

// Images of X_q and Z_q under a gate, for each qubit the gate touches.
struct LocalImages {
    int qubits[2] = {0, 0};
    int count = 0;
    PauliOp x_image[2] = {PauliOp(1), PauliOp(1)};
    PauliOp z_image[2] = {PauliOp(1), PauliOp(1)};
};

LocalImages gate_images(const Gate &g, int n) {
    LocalImages out;
    int t = g.target;
    auto X = [&](int q) { return PauliOp::single(n, q, 'X'); };
    auto Y = [&](int q) { return PauliOp::single(n, q, 'Y'); };
    auto Z = [&](int q) { return PauliOp::single(n, q, 'Z'); };
    out.count = 1;
    out.qubits[0] = t;
    switch (g.kind) {
        case GateKind::kH:
            out.x_image[0] = Z(t);
            out.z_image[0] = X(t);
            break;
        case GateKind::kS:
            out.x_image[0] = Y(t);
            out.z_image[0] = Z(t);
            break;
        case GateKind::kX:
            out.x_image[0] = X(t);
            out.z_image[0] = Z(t).negated();
            break;
        case GateKind::kY:
            out.x_image[0] = X(t).negated();
            out.z_image[0] = Z(t).negated();
            break;
        case GateKind::kZ:
            out.x_image[0] = X(t).negated();
            out.z_image[0] = Z(t);
            break;
        case GateKind::kCnot: {
            int c = g.control;
            out.count = 2;
            out.qubits[0] = c;
            out.qubits[1] = t;
            out.x_image[0] = multiply(X(c), X(t));
            out.z_image[0] = Z(c);
            out.x_image[1] = X(t);
            out.z_image[1] = multiply(Z(c), Z(t));
            break;
        }
    }
    return out;
}

// Symplectic projection of v onto the complement of the pair (x, z).
PauliOp project_out(const PauliOp &v, const PauliOp &x, const PauliOp &z) {
    PauliOp out = v;
    if (!commutes(v, z)) {
        out = multiply(out, x);
    }
    if (!commutes(v, x)) {
        out = multiply(out, z);
    }
    return out.phaseless();
}

CliffordCircuit recovery_from_signs(const CodeReport &report, const std::function<int(const PauliOp &)> &sign_of) {
    CliffordCircuit layer{report.n, {}};
    PauliOp correction(report.n);
    for (const Triplet &t : report.triplets) {
        int sx = sign_of(t.x_op);
        int sy = sign_of(t.y_op);
        int sz = sign_of(t.z_op);
        if (sx * sz != sy) {
            throw ValidationError(
                "sign pattern (" + std::to_string(sx) + "," + std::to_string(sy) + "," + std::to_string(sz) +
                ") on triplet " + t.str() + " is not realizable by a logical Pauli; the code is not UCS under this channel");
        }
        // A logical Pauli flips exactly the generators it anticommutes with.
        if (sx < 0 && sz < 0) {
            correction = multiply(correction, t.y_op);
        } else if (sx < 0) {
            correction = multiply(correction, t.z_op);
        } else if (sz < 0) {
            correction = multiply(correction, t.x_op);
        }
    }
    for (int q = 1; q <= report.n; q++) {
        char letter = correction.letter(q);
        if (letter != 'I') {
            layer.append(Gate::pauli(letter, q));
        }
    }
    for (const Triplet &t : report.triplets) {
        for (const PauliOp *g : {&t.x_op, &t.y_op, &t.z_op}) {
            int flipped = sign_of(*g) * (commutes(correction, *g) ? 1 : -1);
            if (flipped != 1) {
                throw std::logic_error("recovery layer failed to restore " + g->str());
            }
        }
    }
    return layer;
}

int sign_from_eigenvalue(double lambda, const PauliOp &g) {
    if (std::abs(lambda - 1) < 1e-6) {
        return 1;
    }
    if (std::abs(lambda + 1) < 1e-6) {
        return -1;
    }
    throw ValidationError("channel eigenvalue " + std::to_string(lambda) + " of " + g.str() + " is not +-1");
}

}  // namespace

Gate Gate::pauli(char letter, int q) {
    switch (letter) {
        case 'X':
            return {GateKind::kX, q, 0};
        case 'Y':
            return {GateKind::kY, q, 0};
        case 'Z':
            return {GateKind::kZ, q, 0};
        default:
            throw std::invalid_argument(std::string("not a Pauli gate letter: ") + letter);
    }
}

std::string Gate::name() const {
    switch (kind) {
        case GateKind::kH:
            return "H";
        case GateKind::kS:
            return "S";
        case GateKind::kCnot:
            return "CNOT";
        case GateKind::kX:
            return "X";
        case GateKind::kY:
            return "Y";
        case GateKind::kZ:
            return "Z";
    }
    return "?";
}

void CliffordCircuit::append(const Gate &g) {
    check_qubit(n, g.target);
    if (g.kind == GateKind::kCnot) {
        check_qubit(n, g.control);
        if (g.control == g.target) {
            throw std::invalid_argument("CNOT control and target must differ");
        }
    }
    gates.push_back(g);
}

CliffordCircuit CliffordCircuit::inverse() const {
    CliffordCircuit out{n, {}};
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        out.gates.push_back(*it);
        if (it->kind == GateKind::kS) {
            // S^dag = S^3
            out.gates.push_back(*it);
            out.gates.push_back(*it);
        }
    }
    return out;
}

PauliOp conjugate_pauli(const Gate &g, const PauliOp &p) {
    int n = p.n_qubits();
    check_qubit(n, g.target);
    if (g.kind == GateKind::kCnot) {
        check_qubit(n, g.control);
    }
    LocalImages images = gate_images(g, n);
    uint64_t touched = 0;
    for (int k = 0; k < images.count; k++) {
        touched |= bit(images.qubits[k]);
    }
    // p = (untouched part, carrying the phase) * (touched letters); the two
    // factors act on disjoint qubits.
    PauliOp out(n, p.x_mask() & ~touched, p.z_mask() & ~touched, p.phase_exp());
    for (int k = 0; k < images.count; k++) {
        int q = images.qubits[k];
        switch (p.letter(q)) {
            case 'X':
                out = multiply(out, images.x_image[k]);
                break;
            case 'Z':
                out = multiply(out, images.z_image[k]);
                break;
            case 'Y':
                // Y = i X Z
                out = multiply(out, multiply(images.x_image[k], images.z_image[k]).times_i(1));
                break;
            default:
                break;
        }
    }
    return out;
}

PauliOp conjugate_pauli(const CliffordCircuit &circ, const PauliOp &p) {
    if (p.n_qubits() != circ.n) {
        throw std::invalid_argument("circuit and Pauli qubit counts differ");
    }
    PauliOp out = p;
    for (const Gate &g : circ.gates) {
        out = conjugate_pauli(g, out);
    }
    return out;
}

std::vector<std::pair<PauliOp, PauliOp>> symplectic_completion(
    const std::vector<std::pair<PauliOp, PauliOp>> &pairs, int n) {
    std::vector<std::pair<PauliOp, PauliOp>> basis;
    for (size_t i = 0; i < pairs.size(); i++) {
        const auto &[x, z] = pairs[i];
        if (x.n_qubits() != n || z.n_qubits() != n) {
            throw std::invalid_argument("symplectic_completion: qubit count mismatch");
        }
        if (commutes(x, z)) {
            throw std::invalid_argument("pair " + std::to_string(i + 1) + " (" + x.str() + ", " + z.str() + ") commutes");
        }
        for (size_t j = 0; j < i; j++) {
            for (const PauliOp *a : {&x, &z}) {
                for (const PauliOp *b : {&pairs[j].first, &pairs[j].second}) {
                    if (!commutes(*a, *b)) {
                        throw std::invalid_argument(
                            "pairs " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " do not commute");
                    }
                }
            }
        }
        basis.emplace_back(x.phaseless(), z.phaseless());
    }
    if (static_cast<int>(basis.size()) > n) {
        throw std::invalid_argument("more pairs than qubits");
    }

    std::vector<PauliOp> pool;
    for (int q = 1; q <= n; q++) {
        pool.push_back(PauliOp::single(n, q, 'X'));
        pool.push_back(PauliOp::single(n, q, 'Z'));
    }
    std::sort(pool.begin(), pool.end());
    for (PauliOp &v : pool) {
        for (const auto &[x, z] : basis) {
            v = project_out(v, x, z);
        }
    }

    while (static_cast<int>(basis.size()) < n) {
        auto u_it = std::find_if(pool.begin(), pool.end(), [](const PauliOp &v) { return !v.is_identity(); });
        if (u_it == pool.end()) {
            throw std::logic_error("symplectic_completion: candidate pool exhausted");
        }
        PauliOp u = *u_it;
        auto w_it = std::find_if(pool.begin(), pool.end(), [&](const PauliOp &v) { return !commutes(u, v); });
        if (w_it == pool.end()) {
            throw std::invalid_argument("symplectic_completion: input pairs are not independent");
        }
        PauliOp w = *w_it;
        basis.emplace_back(u, w);
        std::vector<PauliOp> next;
        for (const PauliOp &v : pool) {
            PauliOp projected = project_out(v, u, w);
            if (!projected.is_identity()) {
                next.push_back(projected);
            }
        }
        pool.swap(next);
    }
    return basis;
}

CliffordCircuit synthesize_encoder(const std::vector<Triplet> &triplets, int n) {
    std::vector<std::pair<PauliOp, PauliOp>> targets;
    for (const Triplet &t : triplets) {
        targets.emplace_back(t.x_op, t.z_op);
    }
    auto basis = symplectic_completion(targets, n);

    // Reduce the basis to (X_i, Z_i) with gates V; the encoder is V^-1.
    CliffordCircuit reduction{n, {}};
    auto apply = [&](const Gate &g) {
        reduction.append(g);
        for (auto &[x, z] : basis) {
            x = conjugate_pauli(g, x);
            z = conjugate_pauli(g, z);
        }
    };
    for (int i = 1; i <= n; i++) {
        auto &pair = basis[static_cast<size_t>(i - 1)];
        // a -> X_i
        for (int q = i; q <= n; q++) {
            char c = pair.first.letter(q);
            if (c == 'Z') {
                apply(Gate::h(q));
            } else if (c == 'Y') {
                apply(Gate::s(q));
            }
        }
        if (pair.first.letter(i) == 'I') {
            for (int q = i + 1; q <= n; q++) {
                if (pair.first.letter(q) == 'X') {
                    apply(Gate::cnot(q, i));
                    break;
                }
            }
        }
        for (int q = i + 1; q <= n; q++) {
            if (pair.first.letter(q) == 'X') {
                apply(Gate::cnot(i, q));
            }
        }
        // b -> Z_i, keeping a = X_i
        if (pair.second.letter(i) == 'Y') {
            apply(Gate::h(i));
            apply(Gate::s(i));
            apply(Gate::h(i));
        }
        for (int q = i + 1; q <= n; q++) {
            char c = pair.second.letter(q);
            if (c == 'X') {
                apply(Gate::h(q));
            } else if (c == 'Y') {
                apply(Gate::s(q));
                apply(Gate::h(q));
            }
        }
        for (int q = i + 1; q <= n; q++) {
            if (pair.second.letter(q) == 'Z') {
                apply(Gate::cnot(q, i));
            }
        }
        if (pair.first.phaseless() != PauliOp::single(n, i, 'X') ||
            pair.second.phaseless() != PauliOp::single(n, i, 'Z')) {
            throw std::logic_error("synthesize_encoder: reduction failed at qubit " + std::to_string(i));
        }
    }

    CliffordCircuit body = reduction.inverse();
    CliffordCircuit encoder{n, {}};
    for (size_t i = 0; i < triplets.size(); i++) {
        int q = static_cast<int>(i) + 1;
        bool flip_x = conjugate_pauli(body, PauliOp::single(n, q, 'X')) != triplets[i].x_op;
        bool flip_z = conjugate_pauli(body, PauliOp::single(n, q, 'Z')) != triplets[i].z_op;
        // Z flips X images, X flips Z images.
        if (flip_x && flip_z) {
            encoder.append(Gate::pauli('Y', q));
        } else if (flip_x) {
            encoder.append(Gate::pauli('Z', q));
        } else if (flip_z) {
            encoder.append(Gate::pauli('X', q));
        }
    }
    for (const Gate &g : body.gates) {
        encoder.append(g);
    }

    for (size_t i = 0; i < triplets.size(); i++) {
        int q = static_cast<int>(i) + 1;
        if (conjugate_pauli(encoder, PauliOp::single(n, q, 'X')) != triplets[i].x_op ||
            conjugate_pauli(encoder, PauliOp::single(n, q, 'Z')) != triplets[i].z_op) {
            throw std::logic_error("synthesize_encoder: conjugation check failed for slot " + std::to_string(q));
        }
    }
    return encoder;
}

CliffordCircuit synthesize_recovery(const CodeReport &report) {
    return recovery_from_signs(report, [&](const PauliOp &g) { return report.sign_of(g); });
}

CliffordCircuit synthesize_recovery(const PauliChannel &ch, const CodeReport &report) {
    return recovery_from_signs(report, [&](const PauliOp &g) { return sign_from_eigenvalue(exact_eigenvalue(ch, g), g); });
}

CliffordCircuit synthesize_recovery(const PIPChannel &ch, const CodeReport &report) {
    PIPChannel eigen = to_eigen(ch);
    return recovery_from_signs(
        report, [&](const PauliOp &g) { return sign_from_eigenvalue(exact_eigenvalue(eigen, g), g); });
}

PauliOp pauli_layer_operator(const CliffordCircuit &layer) {
    PauliOp out(layer.n);
    for (const Gate &g : layer.gates) {
        if (g.kind != GateKind::kX && g.kind != GateKind::kY && g.kind != GateKind::kZ) {
            throw std::invalid_argument("pauli_layer_operator: circuit contains " + g.name());
        }
        out = multiply(PauliOp::single(layer.n, g.target, g.name()[0]), out);
    }
    return out.phaseless();
}

}  // namespace pipcodes
