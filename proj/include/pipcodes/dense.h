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

#ifndef PIPCODES_DENSE_H
#define PIPCODES_DENSE_H

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "pipcodes/pauli.h"

namespace pipcodes {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Default cap on qubit count for anything that materializes 2^n x 2^n matrices.
inline constexpr int kDenseMaxQubits = 5;

/// Throws CapError naming `what` when n exceeds cap.
void check_dense_cap(int n, int cap, const std::string &what);

/// Computational basis convention: qubit 1 is the most significant bit of the
/// basis index, matching kron(s_1, s_2, ..., s_n).
///
/// For P = i^e s_1 (x) ... (x) s_n with x/z masks moved to basis order,
///     P|j> = i^(e + #Y) (-1)^popcount(j & z) |j ^ x>.
struct BasisPauli {
    uint64_t x = 0;
    uint64_t z = 0;
    Complex phase = 1;
};
BasisPauli to_basis_order(const PauliOp &p);

/// Dense 2^n x 2^n matrix of p.
CMatrix pauli_matrix(const PauliOp &p);

/// tr(P A) in O(2^n).
Complex trace_with_pauli(const PauliOp &p, const CMatrix &a);

/// P v.
CVector apply_pauli(const PauliOp &p, const CVector &v);

CMatrix kron(const CMatrix &a, const CMatrix &b);

}  // namespace pipcodes

#endif
