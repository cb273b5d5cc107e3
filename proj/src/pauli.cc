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

#include "pipcodes/pauli.h"

#include <bit>
#include <stdexcept>

namespace pipcodes {

namespace {

uint64_t width_mask(int n) { return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

void check_same_size(const PauliOp &a, const PauliOp &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument(
            "Pauli size mismatch: " + std::to_string(a.n_qubits()) + " vs " + std::to_string(b.n_qubits()));
    }
}

// Letter rank used for lexicographic order: I=0, X=1, Y=2, Z=3.
int letter_rank(bool x, bool z) {
    if (!x) {
        return z ? 3 : 0;
    }
    return z ? 2 : 1;
}

uint64_t binomial_exact(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; i++) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<uint64_t>(r);
}

double binomial_double(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    double r = 1;
    for (int i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

std::string WeightClass::str() const {
    return "(" + std::to_string(wx) + "," + std::to_string(wy) + "," + std::to_string(wz) + ")";
}

std::strong_ordering WeightClass::operator<=>(const WeightClass &other) const {
    if (auto c = total() <=> other.total(); c != 0) {
        return c;
    }
    if (auto c = wx <=> other.wx; c != 0) {
        return c;
    }
    if (auto c = wy <=> other.wy; c != 0) {
        return c;
    }
    return wz <=> other.wz;
}

PauliOp::PauliOp(int n_qubits) : PauliOp(n_qubits, 0, 0, 0) {}

PauliOp::PauliOp(int n_qubits, uint64_t x_mask, uint64_t z_mask, int phase_exp)
    : n_(n_qubits), x_(x_mask), z_(z_mask), phase_(((phase_exp % 4) + 4) % 4) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument(
            "Pauli qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " + std::to_string(n_qubits));
    }
    if (((x_mask | z_mask) & ~width_mask(n_qubits)) != 0) {
        throw std::invalid_argument("Pauli mask has bits beyond qubit " + std::to_string(n_qubits));
    }
}

PauliOp PauliOp::single(int n_qubits, int qubit, char letter) {
    if (qubit < 1 || qubit > n_qubits) {
        throw std::invalid_argument("qubit index " + std::to_string(qubit) + " out of range");
    }
    uint64_t bit = uint64_t{1} << (qubit - 1);
    switch (letter) {
        case 'I':
            return PauliOp(n_qubits);
        case 'X':
            return PauliOp(n_qubits, bit, 0);
        case 'Y':
            return PauliOp(n_qubits, bit, bit);
        case 'Z':
            return PauliOp(n_qubits, 0, bit);
        default:
            throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
    }
}

char PauliOp::letter(int qubit) const {
    int b = qubit - 1;
    return "IXYZ"[letter_rank((x_ >> b) & 1, (z_ >> b) & 1)];
}

std::string PauliOp::letters() const {
    std::string out;
    out.reserve(n_);
    for (int q = 1; q <= n_; q++) {
        out.push_back(letter(q));
    }
    return out;
}

std::string PauliOp::str() const {
    static constexpr const char *kPrefix[] = {"", "+i", "-", "-i"};
    return kPrefix[phase_] + letters();
}

std::strong_ordering PauliOp::operator<=>(const PauliOp &other) const {
    if (auto c = n_ <=> other.n_; c != 0) {
        return c;
    }
    // The first differing qubit decides.
    uint64_t diff = (x_ ^ other.x_) | (z_ ^ other.z_);
    if (diff != 0) {
        int b = std::countr_zero(diff);
        int mine = letter_rank((x_ >> b) & 1, (z_ >> b) & 1);
        int theirs = letter_rank((other.x_ >> b) & 1, (other.z_ >> b) & 1);
        return mine <=> theirs;
    }
    return phase_ <=> other.phase_;
}

PauliOp parse_pauli(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty Pauli string");
    }
    int phase = 0;
    if (text.starts_with("+i")) {
        phase = 1;
        text.remove_prefix(2);
    } else if (text.starts_with("-i")) {
        phase = 3;
        text.remove_prefix(2);
    } else if (text.starts_with("+")) {
        text.remove_prefix(1);
    } else if (text.starts_with("-")) {
        phase = 2;
        text.remove_prefix(1);
    } else if (text.starts_with("i")) {
        throw std::invalid_argument("unknown phase prefix in Pauli string (use +i or -i)");
    }
    if (text.empty()) {
        throw std::invalid_argument("Pauli string has a phase prefix but no letters");
    }
    if (text.size() > static_cast<size_t>(kMaxQubits)) {
        throw std::invalid_argument(
            "Pauli string longer than " + std::to_string(kMaxQubits) + " qubits");
    }
    uint64_t x = 0;
    uint64_t z = 0;
    for (size_t k = 0; k < text.size(); k++) {
        uint64_t bit = uint64_t{1} << k;
        switch (text[k]) {
            case 'I':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            default:
                throw std::invalid_argument(std::string("unknown Pauli letter '") + text[k] + "'");
        }
    }
    return PauliOp(static_cast<int>(text.size()), x, z, phase);
}

std::string format_pauli(const PauliOp &p) { return p.str(); }

PauliOp multiply(const PauliOp &a, const PauliOp &b) {
    check_same_size(a, b);
    uint64_t ax = a.x_mask() & ~a.z_mask();
    uint64_t ay = a.x_mask() & a.z_mask();
    uint64_t az = ~a.x_mask() & a.z_mask();
    uint64_t bx = b.x_mask() & ~b.z_mask();
    uint64_t by = b.x_mask() & b.z_mask();
    uint64_t bz = ~b.x_mask() & b.z_mask();
    int cyclic = std::popcount((ax & by) | (ay & bz) | (az & bx));
    int anticyclic = std::popcount((ay & bx) | (az & by) | (ax & bz));
    return PauliOp(
        a.n_qubits(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask(),
        a.phase_exp() + b.phase_exp() + cyclic + 3 * anticyclic);
}

PauliOp operator*(const PauliOp &a, const PauliOp &b) { return multiply(a, b); }

bool commutes(const PauliOp &a, const PauliOp &b) {
    check_same_size(a, b);
    return (std::popcount((a.x_mask() & b.z_mask()) ^ (a.z_mask() & b.x_mask())) & 1) == 0;
}

WeightClass weight_class(const PauliOp &p) {
    return {
        std::popcount(p.x_mask() & ~p.z_mask()),
        std::popcount(p.x_mask() & p.z_mask()),
        std::popcount(~p.x_mask() & p.z_mask()),
    };
}

PauliOp permute_qubits(const PauliOp &p, std::span<const int> perm) {
    int n = p.n_qubits();
    if (static_cast<int>(perm.size()) != n) {
        throw std::invalid_argument("permutation size does not match qubit count");
    }
    uint64_t x = 0;
    uint64_t z = 0;
    uint64_t seen = 0;
    for (int q = 0; q < n; q++) {
        int target = perm[q] - 1;
        if (target < 0 || target >= n || ((seen >> target) & 1)) {
            throw std::invalid_argument("invalid qubit permutation");
        }
        seen |= uint64_t{1} << target;
        x |= ((p.x_mask() >> q) & 1) << target;
        z |= ((p.z_mask() >> q) & 1) << target;
    }
    return PauliOp(n, x, z, p.phase_exp());
}

double class_size(int n, const WeightClass &w) {
    if (!w.fits(n)) {
        return 0;
    }
    int total = w.total();
    return binomial_double(n, total) * binomial_double(total, w.wx) * binomial_double(w.wy + w.wz, w.wy);
}

uint64_t class_size_exact(int n, const WeightClass &w) {
    if (!w.fits(n)) {
        return 0;
    }
    int total = w.total();
    unsigned __int128 r = binomial_exact(n, total);
    r *= binomial_exact(total, w.wx);
    if (r > UINT64_MAX) {
        throw std::overflow_error("class size exceeds 64 bits");
    }
    r *= binomial_exact(w.wy + w.wz, w.wy);
    if (r > UINT64_MAX) {
        throw std::overflow_error("class size exceeds 64 bits");
    }
    return static_cast<uint64_t>(r);
}

PauliOp class_representative(int n, const WeightClass &w) {
    if (!w.fits(n)) {
        throw std::invalid_argument("class " + w.str() + " does not fit on " + std::to_string(n) + " qubits");
    }
    uint64_t x = 0;
    uint64_t z = 0;
    int q = 0;
    for (int k = 0; k < w.wx; k++, q++) {
        x |= uint64_t{1} << q;
    }
    for (int k = 0; k < w.wy; k++, q++) {
        x |= uint64_t{1} << q;
        z |= uint64_t{1} << q;
    }
    for (int k = 0; k < w.wz; k++, q++) {
        z |= uint64_t{1} << q;
    }
    return PauliOp(n, x, z);
}

void for_each_in_class(int n, const WeightClass &w, const std::function<void(const PauliOp &)> &fn) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count out of range");
    }
    if (!w.fits(n)) {
        throw std::invalid_argument("class " + w.str() + " does not fit on " + std::to_string(n) + " qubits");
    }
    // Depth-first over qubits choosing letters in I < X < Y < Z order gives
    // lexicographic output directly.
    std::function<void(int, int, int, int, int, uint64_t, uint64_t)> rec =
        [&](int q, int ri, int rx, int ry, int rz, uint64_t x, uint64_t z) {
            if (q == n) {
                fn(PauliOp(n, x, z));
                return;
            }
            uint64_t bit = uint64_t{1} << q;
            if (ri > 0) {
                rec(q + 1, ri - 1, rx, ry, rz, x, z);
            }
            if (rx > 0) {
                rec(q + 1, ri, rx - 1, ry, rz, x | bit, z);
            }
            if (ry > 0) {
                rec(q + 1, ri, rx, ry - 1, rz, x | bit, z | bit);
            }
            if (rz > 0) {
                rec(q + 1, ri, rx, ry, rz - 1, x, z | bit);
            }
        };
    rec(0, n - w.total(), w.wx, w.wy, w.wz, 0, 0);
}

std::vector<PauliOp> enumerate_class(int n, const WeightClass &w) {
    std::vector<PauliOp> out;
    for_each_in_class(n, w, [&](const PauliOp &p) { out.push_back(p); });
    return out;
}

size_t PauliOpHash::operator()(const PauliOp &p) const {
    uint64_t h = p.x_mask() * 0x9E3779B97F4A7C15ULL;
    h ^= p.z_mask() + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    h ^= static_cast<uint64_t>(p.n_qubits() * 4 + p.phase_exp()) * 0xBF58476D1CE4E5B9ULL;
    return static_cast<size_t>(h);
}

}  // namespace pipcodes
