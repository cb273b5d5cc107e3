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

#include "pipcodes/twirl.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pipcodes/errors.h"

namespace pipcodes {

TwirlGroup parse_twirl_group(const std::string &name) {
    if (name == "pauli") {
        return TwirlGroup::kPauli;
    }
    if (name == "perm" || name == "permutation") {
        return TwirlGroup::kPermutation;
    }
    if (name == "both") {
        return TwirlGroup::kBoth;
    }
    throw std::invalid_argument("unknown twirl group '" + name + "' (expected pauli, perm or both)");
}

const char *twirl_group_name(TwirlGroup group) {
    switch (group) {
        case TwirlGroup::kPauli:
            return "pauli";
        case TwirlGroup::kPermutation:
            return "perm";
        case TwirlGroup::kBoth:
            return "both";
    }
    return "?";
}

PauliChannel pauli_twirl(const GeneralChannel &ch, int cap) { return chi_diagonal(ch, cap); }

PIPChannel permutation_twirl(const PauliChannel &ch) {
    ClassIndex index(ch.n);
    PIPChannel out{ch.n, Rep::kProb, std::vector<double>(index.size(), 0.0)};
    for (const auto &[p, v] : ch.probs) {
        out.values[index.index_of(weight_class(p))] += v;
    }
    return out;
}

PIPChannel pip_twirl(const GeneralChannel &ch, int cap) { return permutation_twirl(pauli_twirl(ch, cap)); }

CMatrix permutation_unitary(int n, const std::vector<int> &perm) {
    if (static_cast<int>(perm.size()) != n) {
        throw std::invalid_argument("permutation size does not match qubit count");
    }
    auto dim = Eigen::Index{1} << n;
    CMatrix u = CMatrix::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; j++) {
        // Bit for qubit q sits at position n-q of the basis index.
        Eigen::Index target = 0;
        for (int q = 1; q <= n; q++) {
            Eigen::Index bit = (j >> (n - q)) & 1;
            target |= bit << (n - perm[static_cast<size_t>(q - 1)]);
        }
        u(target, j) = 1;
    }
    return u;
}

std::vector<CMatrix> twirl_group_unitaries(int n, TwirlGroup group) {
    std::vector<CMatrix> paulis;
    std::vector<CMatrix> perms;
    if (group != TwirlGroup::kPermutation) {
        for (uint64_t i = 0; i < (uint64_t{1} << (2 * n)); i++) {
            paulis.push_back(pauli_matrix(pauli_from_index(n, i)));
        }
    }
    if (group != TwirlGroup::kPauli) {
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            perms.push_back(permutation_unitary(n, perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (group == TwirlGroup::kPauli) {
        return paulis;
    }
    if (group == TwirlGroup::kPermutation) {
        return perms;
    }
    std::vector<CMatrix> both;
    for (const CMatrix &s : perms) {
        for (const CMatrix &p : paulis) {
            both.push_back(s * p);
        }
    }
    return both;
}

GeneralChannel brute_force_twirl(const GeneralChannel &ch, TwirlGroup group) {
    if (ch.n > kBruteForceMaxQubits) {
        throw CapError(
            "brute_force_twirl: " + std::to_string(ch.n) + " qubits exceeds the oracle cap of " +
            std::to_string(kBruteForceMaxQubits));
    }
    std::vector<CMatrix> elements = twirl_group_unitaries(ch.n, group);
    double scale = 1.0 / std::sqrt(static_cast<double>(elements.size()));
    GeneralChannel out{ch.n, {}};
    out.kraus.reserve(elements.size() * ch.kraus.size());
    for (const CMatrix &u : elements) {
        for (const CMatrix &a : ch.kraus) {
            out.kraus.push_back(scale * (u.adjoint() * a * u));
        }
    }
    return out;
}

}  // namespace pipcodes
