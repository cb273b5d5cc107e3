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

#ifndef PIPCODES_VERIFY_H
#define PIPCODES_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

#include "pipcodes/channels.h"
#include "pipcodes/clifford.h"
#include "pipcodes/code_finder.h"

namespace pipcodes {

struct DensityMatrix {
    int n = 0;
    CMatrix entries;

    static DensityMatrix pure(int n, const CVector &psi);
    static DensityMatrix maximally_mixed(int n);
    /// Hermitian (1e-10), unit trace (1e-10), smallest eigenvalue >= -1e-9.
    bool is_valid() const;
};

/// Dense unitary of a Clifford circuit (U = g_m ... g_1).
CMatrix circuit_unitary(const CliffordCircuit &circ, int cap = kDenseMaxQubits);

DensityMatrix apply_channel(const GeneralChannel &ch, const DensityMatrix &rho, int cap = kDenseMaxQubits);
DensityMatrix apply_channel(const PauliChannel &ch, const DensityMatrix &rho, int cap = kDenseMaxQubits);

/// Induced map on the k logical qubits (slots 1..k):
///     sigma -> tr_B[ E^dag R L(E (sigma (x) I_B / d_B) E^dag) R^dag E ]
/// with E the encoder, R the recovery circuit and L the channel. Returned as
/// Kraus operators from the eigendecomposition of the Choi matrix.
GeneralChannel logical_channel(
    const GeneralChannel &ch, const CliffordCircuit &encoder, const CliffordCircuit &recovery, int k,
    int cap = kDenseMaxQubits);

/// Entanglement fidelity with the identity, sum_k |tr(A_k) / d|^2.
double entanglement_fidelity(const GeneralChannel &ch);
/// (d F_e + 1) / (d + 1).
double average_gate_fidelity(const GeneralChannel &ch);

/// Fidelity floor used to call a code verified.
inline constexpr double kVerifyThreshold = 1 - 1e-6;

struct KrausDiagnostic {
    /// tr(K^dag K) / d, the share of the logical channel carried by K.
    double weight = 0;
    /// |tr(K) / d|^2, its overlap with the identity.
    double identity_overlap = 0;
};

struct FidelityReport {
    std::string code;
    std::string channel;
    int logical_qubits = 0;
    double avg_gate_fidelity = 0;
    double twirled_avg_gate_fidelity = 0;
    /// Smallest state fidelity over logical product stabilizer states.
    double worst_case_over_probes = 0;
    std::vector<KrausDiagnostic> kraus;
    /// The code verifies on the twirled channel but not on the original.
    bool theorem_violation = false;
};

/// Logical fidelities of the code under the original channel and under its
/// permutation-invariant Pauli twirl.
FidelityReport verify_code(
    const GeneralChannel &original, const CodeReport &report, const CliffordCircuit &encoder,
    const CliffordCircuit &recovery, int cap = kDenseMaxQubits);

enum class Readout {
    /// One projective +-1 measurement of P per sample.
    kSingleShot,
    /// The exact expectation tr(P rho_out) per sample.
    kExpectation,
};

struct EstimationResult {
    WeightClass w;
    double estimate = 0;
    double std_error = 0;
    int64_t samples = 0;
    uint64_t seed = 0;
};

/// Number of independently seeded sample streams merged by the estimator.
inline constexpr int kEstimatorStreams = 4;

/// Simulated eigenvalue experiment for class w: each sample draws a uniform
/// class-w Pauli P and a uniform product eigenstate of P (Z eigenstates on
/// identity positions), applies the channel and records
/// (input eigenvalue) x (measured P). Unbiased for lambda_w of the
/// permutation-invariant Pauli twirl. Throws std::invalid_argument for
/// samples < 2.
EstimationResult mc_estimate_eigenvalue(
    const GeneralChannel &ch, const WeightClass &w, int64_t samples, uint64_t seed,
    Readout readout = Readout::kSingleShot, int cap = kDenseMaxQubits);
EstimationResult mc_estimate_eigenvalue(
    const PauliChannel &ch, const WeightClass &w, int64_t samples, uint64_t seed,
    Readout readout = Readout::kSingleShot, int cap = kDenseMaxQubits);

}  // namespace pipcodes

#endif
