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

#ifndef PIPCODES_PAULI_H
#define PIPCODES_PAULI_H

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pipcodes {

/// Largest qubit count supported by the bit-mask layer.
inline constexpr int kMaxQubits = 63;

/// Counts of X, Y and Z tensor factors. Labels the permutation-equivalence
/// class of a Pauli operator.
struct WeightClass {
    int wx = 0;
    int wy = 0;
    int wz = 0;

    int total() const { return wx + wy + wz; }
    bool fits(int n) const { return wx >= 0 && wy >= 0 && wz >= 0 && total() <= n; }
    bool is_identity() const { return total() == 0; }

    /// "(wx,wy,wz)".
    std::string str() const;

    bool operator==(const WeightClass &) const = default;
    /// Class-index order: total weight first, then (wx, wy, wz).
    std::strong_ordering operator<=>(const WeightClass &other) const;
};

/// An n-qubit Pauli operator  i^phase_exp * s_1 (x) s_2 (x) ... (x) s_n  where
/// each s_q is one of the Hermitian matrices I, X, Y, Z.
///
/// Qubit q (1-indexed, leftmost letter of the string form) is stored at bit
/// q-1 of both masks. A qubit carrying Y has both bits set; Y is the Hermitian
/// Y, so the phaseless part of every PauliOp is Hermitian and phase_exp alone
/// decides Hermiticity (even exponent).
///
/// Multiplication per qubit follows XY = iZ, YZ = iX, ZX = iY and the reversed
/// products pick up -i. For masks this gives
///     phase(a*b) = a.phase + b.phase + #cyclic(a,b) - #anticyclic(a,b)  (mod 4)
/// where #cyclic counts positions with (a,b) in {(X,Y),(Y,Z),(Z,X)}.
class PauliOp {
   public:
    /// Identity on n qubits. Throws std::invalid_argument unless 1 <= n <= kMaxQubits.
    explicit PauliOp(int n_qubits);
    PauliOp(int n_qubits, uint64_t x_mask, uint64_t z_mask, int phase_exp = 0);

    /// Single-qubit letter ('I','X','Y','Z') on 1-indexed qubit q, identity elsewhere.
    static PauliOp single(int n_qubits, int qubit, char letter);

    int n_qubits() const { return n_; }
    uint64_t x_mask() const { return x_; }
    uint64_t z_mask() const { return z_; }
    int phase_exp() const { return phase_; }

    bool is_hermitian() const { return (phase_ & 1) == 0; }
    bool is_identity() const { return x_ == 0 && z_ == 0; }
    /// Same masks, phase_exp reset to 0.
    PauliOp phaseless() const { return PauliOp(n_, x_, z_, 0); }
    /// Multiplies the overall factor by i^k.
    PauliOp times_i(int k) const { return PauliOp(n_, x_, z_, phase_ + k); }
    PauliOp negated() const { return times_i(2); }

    /// Letter on 1-indexed qubit q.
    char letter(int qubit) const;
    /// Letters only, no phase prefix.
    std::string letters() const;
    /// Canonical text form: letters with a "+i", "-", "-i" prefix for
    /// non-unit phases and no prefix for +1.
    std::string str() const;

    bool operator==(const PauliOp &) const = default;
    /// Lexicographic on the letter string (I < X < Y < Z), then phase.
    std::strong_ordering operator<=>(const PauliOp &other) const;

   private:
    int n_;
    uint64_t x_;
    uint64_t z_;
    int phase_;
};

/// Parses "[+|-|+i|-i]<letters>". Throws std::invalid_argument on an empty
/// string, unknown letters or an unknown phase prefix.
PauliOp parse_pauli(std::string_view text);
/// Same as PauliOp::str().
std::string format_pauli(const PauliOp &p);

/// Exact operator product a*b. Throws std::invalid_argument on size mismatch.
PauliOp multiply(const PauliOp &a, const PauliOp &b);
PauliOp operator*(const PauliOp &a, const PauliOp &b);

/// True iff a and b commute. Phase-independent.
bool commutes(const PauliOp &a, const PauliOp &b);

WeightClass weight_class(const PauliOp &p);

/// Relabels qubits: qubit q of p lands on qubit perm[q-1] (1-indexed values).
PauliOp permute_qubits(const PauliOp &p, std::span<const int> perm);

/// Number of phaseless Paulis on n qubits in class w, C(n,W) C(W,wx) C(wy+wz,wy).
/// Returned as double; exact for every n up to kMaxQubits within double range
/// only when the value is below 2^53, use class_size_exact for exact counts.
double class_size(int n, const WeightClass &w);
/// Exact class size. Throws std::overflow_error when it does not fit in 64 bits.
uint64_t class_size_exact(int n, const WeightClass &w);

/// Canonical representative of class w: X's first, then Y's, then Z's, then I's.
PauliOp class_representative(int n, const WeightClass &w);

/// Calls fn for every phaseless Pauli in class w in lexicographic order.
void for_each_in_class(int n, const WeightClass &w, const std::function<void(const PauliOp &)> &fn);

/// Every phaseless Pauli of class w in lexicographic order. Throws
/// std::invalid_argument when w does not fit on n qubits.
std::vector<PauliOp> enumerate_class(int n, const WeightClass &w);

struct PauliOpHash {
    size_t operator()(const PauliOp &p) const;
};

}  // namespace pipcodes

#endif
