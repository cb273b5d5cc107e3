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

#ifndef PIPCODES_CODE_FINDER_H
#define PIPCODES_CODE_FINDER_H

#include <string>
#include <vector>

#include "pipcodes/pauli.h"
#include "pipcodes/weight_space.h"

namespace pipcodes {

enum class SearchMode {
    /// Fixed points of the channel itself (eigenvalue +1).
    kNoiseless,
    /// Fixed points of the channel composed with its dual (eigenvalue +-1).
    kUcs,
};

SearchMode parse_search_mode(const std::string &name);
const char *search_mode_name(SearchMode mode);

inline constexpr double kDefaultFixedTol = 1e-9;
inline constexpr int kDefaultExpansionCap = 12;

/// One encoded qubit: Hermitian Paulis with x*y = i z, y*z = i x, z*x = i y.
struct Triplet {
    PauliOp x_op;
    PauliOp y_op;
    PauliOp z_op;

    /// Builds the triplet from an anticommuting Hermitian pair, with
    /// y = i x z.
    static Triplet from_pair(const PauliOp &x, const PauliOp &z);
    /// Checks the su(2) relations by direct multiplication.
    bool satisfies_su2() const;
    std::string str() const;
};

struct FixedClass {
    WeightClass w;
    /// +1 or -1.
    int sign = 1;
    double eigenvalue = 1;
};

struct FixedPauli {
    PauliOp op;
    int sign = 1;
};

struct TripletSearch {
    std::vector<Triplet> triplets;
    /// Fixed operators left over after the last accepted triplet.
    std::vector<PauliOp> residual;
};

struct CodeReport {
    int n = 0;
    SearchMode mode = SearchMode::kNoiseless;
    double tol = kDefaultFixedTol;
    /// Eigen-rep channel the search ran on.
    PIPChannel channel;
    std::vector<FixedClass> fixed_classes;
    /// Every Pauli in a fixed class, identity included, lexicographic.
    std::vector<FixedPauli> fixed_paulis;
    std::vector<Triplet> triplets;
    int logical_qubits = 0;
    std::vector<PauliOp> residual;

    /// Sign of the channel eigenvalue of a fixed operator. Throws when op is
    /// not in a fixed class.
    int sign_of(const PauliOp &op) const;
    /// "1 logical qubit; triplet XX/XY/IZ" style one-liner.
    std::string summary() const;
};

/// Classes whose eigenvalue is within tol of +1 (noiseless) or of +-1 (ucs),
/// in ClassIndex order. Class (0,0,0) is always included with sign +1.
std::vector<FixedClass> fixed_classes(const PIPChannel &ch, SearchMode mode, double tol = kDefaultFixedTol);

/// All non-identity Paulis in the given classes, lexicographic. Throws
/// CapError above cap qubits.
std::vector<PauliOp> expand_fixed_set(int n, const std::vector<FixedClass> &classes, int cap = kDefaultExpansionCap);

/// Greedy su(2) triplet search over a deduplicated, lexicographically sorted
/// fixed set. Scans pairs (A, B), A < B, in order and accepts the first
/// anticommuting pair whose phaseless product is also in the set; the triplet
/// gets z = A, x = B, y = i x z. Triplet members and everything that fails to
/// commute with both A and B are removed before the next scan.
TripletSearch find_triplets(const std::vector<PauliOp> &fixed);

/// fixed_classes -> expand_fixed_set -> find_triplets.
CodeReport find_codes(
    const PIPChannel &ch, SearchMode mode, double tol = kDefaultFixedTol, int cap = kDefaultExpansionCap);

}  // namespace pipcodes

#endif
