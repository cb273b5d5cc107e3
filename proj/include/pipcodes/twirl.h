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

#ifndef PIPCODES_TWIRL_H
#define PIPCODES_TWIRL_H

#include <vector>

#include "pipcodes/channels.h"

namespace pipcodes {

enum class TwirlGroup { kPauli, kPermutation, kBoth };

/// Parses "pauli", "perm"/"permutation", "both".
TwirlGroup parse_twirl_group(const std::string &name);
const char *twirl_group_name(TwirlGroup group);

/// Average over conjugation by all n-qubit Paulis: keeps the chi diagonal.
PauliChannel pauli_twirl(const GeneralChannel &ch, int cap = kDenseMaxQubits);

/// Average over all qubit permutations of a Pauli channel, expressed as
/// class masses p_w = sum_{P in w} p(P).
PIPChannel permutation_twirl(const PauliChannel &ch);

/// permutation_twirl(pauli_twirl(ch)).
PIPChannel pip_twirl(const GeneralChannel &ch, int cap = kDenseMaxQubits);

/// Largest qubit count accepted by brute_force_twirl.
inline constexpr int kBruteForceMaxQubits = 3;

/// Dense unitary permuting qubits: qubit q moves to perm[q-1] (1-indexed).
CMatrix permutation_unitary(int n, const std::vector<int> &perm);

/// Twirl group elements as dense unitaries; the first one is the identity.
std::vector<CMatrix> twirl_group_unitaries(int n, TwirlGroup group);

/// Explicit uniform group average with Kraus set {U_j^dag A_k U_j / sqrt|G|}.
/// Test oracle. Throws CapError above kBruteForceMaxQubits.
GeneralChannel brute_force_twirl(const GeneralChannel &ch, TwirlGroup group);

}  // namespace pipcodes

#endif
