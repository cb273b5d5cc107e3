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

#include "pipcodes/dense.h"

#include <bit>

#include "pipcodes/errors.h"

namespace pipcodes {

namespace {

constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

uint64_t reverse_bits(uint64_t mask, int n) {
    uint64_t out = 0;
    for (int q = 0; q < n; q++) {
        out |= ((mask >> q) & 1) << (n - 1 - q);
    }
    return out;
}

}  // namespace

void check_dense_cap(int n, int cap, const std::string &what) {
    if (n > cap) {
        throw CapError(
            what + ": " + std::to_string(n) + " qubits exceeds the dense cap of " + std::to_string(cap) + " qubits");
    }
}

BasisPauli to_basis_order(const PauliOp &p) {
    int n = p.n_qubits();
    int ys = std::popcount(p.x_mask() & p.z_mask());
    return {reverse_bits(p.x_mask(), n), reverse_bits(p.z_mask(), n), kIPowers[(p.phase_exp() + ys) % 4]};
}

CMatrix pauli_matrix(const PauliOp &p) {
    auto dim = Eigen::Index{1} << p.n_qubits();
    BasisPauli b = to_basis_order(p);
    CMatrix m = CMatrix::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; j++) {
        auto col = static_cast<uint64_t>(j);
        double sign = (std::popcount(col & b.z) & 1) ? -1.0 : 1.0;
        m(static_cast<Eigen::Index>(col ^ b.x), j) = b.phase * sign;
    }
    return m;
}

Complex trace_with_pauli(const PauliOp &p, const CMatrix &a) {
    // tr(PA) = sum_m P[m^x, m] A[m, m^x]
    BasisPauli b = to_basis_order(p);
    Complex acc = 0;
    for (Eigen::Index m = 0; m < a.rows(); m++) {
        auto row = static_cast<uint64_t>(m);
        double sign = (std::popcount(row & b.z) & 1) ? -1.0 : 1.0;
        acc += sign * a(m, static_cast<Eigen::Index>(row ^ b.x));
    }
    return acc * b.phase;
}

CVector apply_pauli(const PauliOp &p, const CVector &v) {
    BasisPauli b = to_basis_order(p);
    CVector out(v.size());
    for (Eigen::Index j = 0; j < v.size(); j++) {
        auto col = static_cast<uint64_t>(j);
        double sign = (std::popcount(col & b.z) & 1) ? -1.0 : 1.0;
        out(static_cast<Eigen::Index>(col ^ b.x)) = b.phase * sign * v(j);
    }
    return out;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace pipcodes
