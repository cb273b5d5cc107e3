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

#ifndef PIPCODES_CLIFFORD_H
#define PIPCODES_CLIFFORD_H

#include <string>
#include <vector>

#include "pipcodes/channels.h"
#include "pipcodes/code_finder.h"
#include "pipcodes/pauli.h"

namespace pipcodes {

enum class GateKind { kH, kS, kCnot, kX, kY, kZ };

/// One gate. Qubits are 1-indexed; single-qubit gates use `target`.
struct Gate {
    GateKind kind;
    int target = 1;
    int control = 0;

    static Gate h(int q) { return {GateKind::kH, q, 0}; }
    static Gate s(int q) { return {GateKind::kS, q, 0}; }
    static Gate cnot(int c, int t) { return {GateKind::kCnot, t, c}; }
    static Gate pauli(char letter, int q);

    std::string name() const;
    bool operator==(const Gate &) const = default;
};

/// Gates in application order: the circuit unitary is U = g_m ... g_2 g_1.
struct CliffordCircuit {
    int n = 0;
    std::vector<Gate> gates;

    /// Throws std::invalid_argument on out-of-range or repeated qubits.
    void append(const Gate &g);
    CliffordCircuit inverse() const;
    bool operator==(const CliffordCircuit &) const = default;
};

/// U p U^dag, gate by gate, with exact phase.
PauliOp conjugate_pauli(const CliffordCircuit &circ, const PauliOp &p);
PauliOp conjugate_pauli(const Gate &g, const PauliOp &p);

/// Logical slots are qubits 1..k. Returns U with U X_i U^dag = triplets[i].x_op
/// and U Z_i U^dag = triplets[i].z_op exactly. The k pairs are completed to a
/// full symplectic basis, the basis is reduced to the standard one with
/// H/S/CNOT, and the reversed reduction is preceded by a Pauli layer fixing
/// signs. Throws std::invalid_argument when the pairs are not symplectically
/// independent.
CliffordCircuit synthesize_encoder(const std::vector<Triplet> &triplets, int n);

/// Completes k (x, z) pairs to n symplectic pairs by greedy Gram-Schmidt over
/// single-qubit X/Z candidates in lexicographic order. Phases are dropped.
std::vector<std::pair<PauliOp, PauliOp>> symplectic_completion(
    const std::vector<std::pair<PauliOp, PauliOp>> &pairs, int n);

/// Pauli layer undoing the sign action of a UCS channel on the code.
/// sign_of(g) must return the +-1 channel eigenvalue of a triplet member g.
/// Throws ValidationError when the signs are not those of a logical Pauli.
CliffordCircuit synthesize_recovery(const CodeReport &report);
CliffordCircuit synthesize_recovery(const PauliChannel &ch, const CodeReport &report);
CliffordCircuit synthesize_recovery(const PIPChannel &ch, const CodeReport &report);

/// The physical Pauli implemented by a circuit made only of X/Y/Z gates.
PauliOp pauli_layer_operator(const CliffordCircuit &layer);

}  // namespace pipcodes

#endif
