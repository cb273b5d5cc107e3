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

#ifndef PIPCODES_CHANNELS_H
#define PIPCODES_CHANNELS_H

#include <map>
#include <string>
#include <vector>

#include "pipcodes/dense.h"
#include "pipcodes/pauli.h"
#include "pipcodes/weight_space.h"

namespace pipcodes {

/// Tolerance on || sum_k A_k^dag A_k - I ||_F.
inline constexpr double kTraceTol = 1e-9;
/// Probabilities in [-kClampTol, 0) are treated as rounding noise and clamped.
inline constexpr double kClampTol = 1e-12;

/// Channel given by Choi-Kraus operators, rho -> sum_k A_k rho A_k^dag.
struct GeneralChannel {
    int n = 0;
    std::vector<CMatrix> kraus;

    static GeneralChannel identity(int n);
    static GeneralChannel unitary(int n, const CMatrix &u);
};

/// Diagonal-chi channel, rho -> sum_P p(P) P rho P. Keys are phaseless.
struct PauliChannel {
    int n = 0;
    std::map<PauliOp, double> probs;

    explicit PauliChannel(int n_qubits = 1) : n(n_qubits) {}

    /// Adds mass to p's phaseless key. Returns false when p carried a phase
    /// that had to be stripped.
    bool add(const PauliOp &p, double prob);
    double prob(const PauliOp &p) const;
    double total() const;

    static PauliChannel identity(int n);
};

struct ValidationReport {
    bool valid = true;
    /// || sum_k A_k^dag A_k - I ||_F for Kraus input, 0 otherwise.
    double tp_defect = 0;
    /// | sum p - 1 | for prob-type input.
    double sum_defect = 0;
    /// Most negative probability, or largest |lambda| excess over 1.
    double range_defect = 0;
    std::vector<std::string> issues;
};

ValidationReport validate_channel(const GeneralChannel &ch);
ValidationReport validate_channel(const PauliChannel &ch);
ValidationReport validate_channel(const PIPChannel &ch);

/// Diagonal of the process matrix in the Pauli basis,
///     chi_PP = sum_k |tr(P A_k) / 2^n|^2.
/// Entries below 1e-15 are dropped. Throws CapError above `cap` qubits.
PauliChannel chi_diagonal(const GeneralChannel &ch, int cap = kDenseMaxQubits);

/// lambda(q) = sum_P p(P) (+1 if [P,q]=0 else -1).
double exact_eigenvalue(const PauliChannel &ch, const PauliOp &q);
/// Eigen-rep entry of weight_class(q).
double exact_eigenvalue(const PIPChannel &ch, const PauliOp &q);

/// Spreads each class mass uniformly over the class members.
PauliChannel expand_pip(const PIPChannel &ch);
/// Kraus form sqrt(p) P.
GeneralChannel to_general(const PauliChannel &ch);
/// Composition a after b (XOR convolution of the distributions).
PauliChannel compose(const PauliChannel &a, const PauliChannel &b);

/// Pauli with lexicographic index i on n qubits (I=0, X=1, Y=2, Z=3 base 4,
/// qubit 1 most significant).
PauliOp pauli_from_index(int n, uint64_t index);

/// Real Pauli transfer matrix R[i][j] = tr(P_i L(P_j)) / 2^n in
/// pauli_from_index order.
Eigen::MatrixXd pauli_transfer_matrix(const GeneralChannel &ch, int cap = kDenseMaxQubits);
Eigen::MatrixXd pauli_transfer_matrix(const PauliChannel &ch, int cap = kDenseMaxQubits);

}  // namespace pipcodes

#endif
