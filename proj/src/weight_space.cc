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

#include "pipcodes/weight_space.h"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

#include "pipcodes/errors.h"

namespace pipcodes {

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " + std::to_string(n));
    }
}

void check_class(int n, const WeightClass &w) {
    if (!w.fits(n)) {
        throw std::invalid_argument("class " + w.str() + " is not valid on " + std::to_string(n) + " qubits");
    }
}

// Dense (n+1)^3 coefficient cube for polynomials in x, y, z of total degree <= n.
class Cube {
   public:
    explicit Cube(int n) : n_(n), c_(static_cast<size_t>(n + 1) * (n + 1) * (n + 1), 0) {}
    __int128 &at(int a, int b, int c) { return c_[(static_cast<size_t>(a) * (n_ + 1) + b) * (n_ + 1) + c]; }
    __int128 at(int a, int b, int c) const { return c_[(static_cast<size_t>(a) * (n_ + 1) + b) * (n_ + 1) + c]; }

    // *this *= (1 + sx x + sy y + sz z), truncated at total degree n.
    void multiply_linear(int sx, int sy, int sz) {
        Cube next(n_);
        for (int a = 0; a <= n_; a++) {
            for (int b = 0; a + b <= n_; b++) {
                for (int c = 0; a + b + c <= n_; c++) {
                    __int128 v = at(a, b, c);
                    if (v == 0) {
                        continue;
                    }
                    next.at(a, b, c) += v;
                    if (a + b + c < n_) {
                        next.at(a + 1, b, c) += sx * v;
                        next.at(a, b + 1, c) += sy * v;
                        next.at(a, b, c + 1) += sz * v;
                    }
                }
            }
        }
        c_.swap(next.c_);
    }

   private:
    int n_;
    std::vector<__int128> c_;
};

std::vector<__int128> sign_sums_enumerated(int n, const WeightClass &w, const ClassIndex &index) {
    PauliOp rep = class_representative(n, w);
    std::vector<__int128> out(index.size(), 0);
    for (size_t i = 0; i < index.size(); i++) {
        __int128 s = 0;
        for_each_in_class(n, index[i], [&](const PauliOp &p) { s += commutes(p, rep) ? 1 : -1; });
        out[i] = s;
    }
    return out;
}

}  // namespace

int64_t class_count(int n) {
    if (n < 1) {
        throw std::invalid_argument("class_count requires n >= 1, got " + std::to_string(n));
    }
    int64_t m = n;
    return (m + 1) * (m + 2) * (m + 3) / 6;
}

ClassIndex::ClassIndex(int n) : n_(n) {
    check_n(n);
    for (int total = 0; total <= n; total++) {
        for (int wx = 0; wx <= total; wx++) {
            for (int wy = 0; wx + wy <= total; wy++) {
                classes_.push_back({wx, wy, total - wx - wy});
            }
        }
    }
    for (size_t i = 0; i < classes_.size(); i++) {
        lookup_.emplace(classes_[i], i);
    }
}

size_t ClassIndex::index_of(const WeightClass &w) const {
    auto it = lookup_.find(w);
    if (it == lookup_.end()) {
        throw std::invalid_argument("class " + w.str() + " is not valid on " + std::to_string(n_) + " qubits");
    }
    return it->second;
}

std::vector<__int128> commutation_sign_sums(int n, const WeightClass &w) {
    check_n(n);
    check_class(n, w);
    // Each qubit of the representative contributes a factor
    // (1 + s_X x + s_Y y + s_Z z) with s = -1 where that letter anticommutes
    // with the representative's letter there. The coefficient of x^a y^b z^c
    // is the signed count over class (a,b,c).
    Cube poly(n);
    poly.at(0, 0, 0) = 1;
    for (int k = 0; k < w.wx; k++) {
        poly.multiply_linear(+1, -1, -1);
    }
    for (int k = 0; k < w.wy; k++) {
        poly.multiply_linear(-1, +1, -1);
    }
    for (int k = 0; k < w.wz; k++) {
        poly.multiply_linear(-1, -1, +1);
    }
    for (int k = 0; k < n - w.total(); k++) {
        poly.multiply_linear(+1, +1, +1);
    }
    ClassIndex index(n);
    std::vector<__int128> out(index.size());
    for (size_t i = 0; i < index.size(); i++) {
        out[i] = poly.at(index[i].wx, index[i].wy, index[i].wz);
    }
    return out;
}

uint64_t anticommute_count(int n, const WeightClass &v, const WeightClass &w, CountMethod method) {
    check_n(n);
    check_class(n, v);
    check_class(n, w);
    if (method == CountMethod::kAuto) {
        method = n <= kEnumerationLimit ? CountMethod::kEnumerate : CountMethod::kGeneratingFunction;
    }
    if (method == CountMethod::kEnumerate) {
        PauliOp rep = class_representative(n, w);
        uint64_t count = 0;
        for_each_in_class(n, v, [&](const PauliOp &p) { count += commutes(p, rep) ? 0 : 1; });
        return count;
    }
    ClassIndex index(n);
    __int128 sign_sum = commutation_sign_sums(n, w)[index.index_of(v)];
    unsigned __int128 size = 1;
    // |v| = C(n,W) C(W,wx) C(wy+wz,wy), exact in 128 bits.
    auto binom = [](int a, int b) {
        unsigned __int128 r = 1;
        for (int i = 1; i <= b; i++) {
            r = r * static_cast<unsigned>(a - b + i) / static_cast<unsigned>(i);
        }
        return r;
    };
    size = binom(n, v.total()) * binom(v.total(), v.wx) * binom(v.wy + v.wz, v.wy);
    unsigned __int128 a = (size - static_cast<unsigned __int128>(sign_sum)) / 2;
    if (a > UINT64_MAX) {
        throw std::overflow_error("anticommute count exceeds 64 bits");
    }
    return static_cast<uint64_t>(a);
}

double OmegaMatrix::operator()(const WeightClass &v, const WeightClass &w) const {
    ClassIndex index(n);
    return entries(static_cast<Eigen::Index>(index.index_of(v)), static_cast<Eigen::Index>(index.index_of(w)));
}

Eigen::VectorXd omega_column(int n, const WeightClass &w) {
    ClassIndex index(n);
    std::vector<__int128> sums = commutation_sign_sums(n, w);
    Eigen::VectorXd col(static_cast<Eigen::Index>(index.size()));
    for (size_t i = 0; i < index.size(); i++) {
        col(static_cast<Eigen::Index>(i)) = static_cast<double>(sums[i]) / class_size(n, index[i]);
    }
    return col;
}

OmegaMatrix omega_matrix(int n, CountMethod method) {
    check_n(n);
    if (n > kOmegaMaxQubits) {
        throw CapError(
            "omega_matrix: n=" + std::to_string(n) + " exceeds the cap of " + std::to_string(kOmegaMaxQubits) +
            " qubits (" + std::to_string(class_count(n)) + "^2 entries)");
    }
    if (method == CountMethod::kAuto) {
        method = n <= kEnumerationLimit ? CountMethod::kEnumerate : CountMethod::kGeneratingFunction;
    }
    static std::mutex cache_mutex;
    static std::map<std::pair<int, int>, OmegaMatrix> cache;
    auto key = std::make_pair(n, static_cast<int>(method));
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
    }

    ClassIndex index(n);
    auto k = static_cast<Eigen::Index>(index.size());
    OmegaMatrix omega{n, Eigen::MatrixXd(k, k)};
    for (Eigen::Index col = 0; col < k; col++) {
        const WeightClass &w = index[static_cast<size_t>(col)];
        std::vector<__int128> sums = method == CountMethod::kEnumerate ? sign_sums_enumerated(n, w, index)
                                                                       : commutation_sign_sums(n, w);
        for (Eigen::Index row = 0; row < k; row++) {
            omega.entries(row, col) =
                static_cast<double>(sums[static_cast<size_t>(row)]) / class_size(n, index[static_cast<size_t>(row)]);
        }
    }

    std::lock_guard lock(cache_mutex);
    cache.emplace(key, omega);
    return omega;
}

const char *rep_name(Rep rep) { return rep == Rep::kProb ? "prob" : "eigen"; }

double PIPChannel::value(const WeightClass &w) const { return values.at(ClassIndex(n).index_of(w)); }

PIPChannel PIPChannel::identity(int n) {
    PIPChannel ch{n, Rep::kProb, std::vector<double>(static_cast<size_t>(class_count(n)), 0.0)};
    ch.values[0] = 1;
    return ch;
}

ConversionResult convert_representation(const PIPChannel &ch, Rep target) {
    if (static_cast<int64_t>(ch.values.size()) != class_count(ch.n)) {
        throw ValidationError(
            "PIP channel on " + std::to_string(ch.n) + " qubits needs " + std::to_string(class_count(ch.n)) +
            " values, got " + std::to_string(ch.values.size()));
    }
    if (ch.rep == target) {
        return {ch, 1};
    }
    OmegaMatrix omega = omega_matrix(ch.n);
    Eigen::Map<const Eigen::VectorXd> in(ch.values.data(), static_cast<Eigen::Index>(ch.values.size()));
    PIPChannel out{ch.n, target, std::vector<double>(ch.values.size())};
    Eigen::Map<Eigen::VectorXd> result(out.values.data(), static_cast<Eigen::Index>(out.values.size()));

    if (target == Rep::kEigen) {
        result = omega.entries.transpose() * in;
        result(0) = 1;
        return {out, 1};
    }

    Eigen::MatrixXd system = omega.entries.transpose();
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
    double rcond = lu.rcond();
    if (!(rcond > 1e-14)) {
        throw NumericalError("eigen -> prob: Omega system is singular to working precision (rcond=" + std::to_string(rcond) + ")");
    }
    result = lu.solve(in);
    for (size_t i = 0; i < out.values.size(); i++) {
        double &p = out.values[i];
        if (p < -kSimplexTol || p > 1 + kSimplexTol) {
            throw NonPhysicalError(
                "eigenvalue vector maps to probability " + std::to_string(p) + " for class " +
                ClassIndex(ch.n)[i].str() + "; not a CP Pauli channel");
        }
        p = std::clamp(p, 0.0, 1.0);
    }
    return {out, rcond};
}

PIPChannel to_eigen(const PIPChannel &ch) { return convert_representation(ch, Rep::kEigen).channel; }

PIPChannel to_prob(const PIPChannel &ch) { return convert_representation(ch, Rep::kProb).channel; }

PIPChannel compose(const PIPChannel &a, const PIPChannel &b) {
    if (a.n != b.n) {
        throw std::invalid_argument("compose: qubit count mismatch");
    }
    PIPChannel ea = to_eigen(a);
    PIPChannel eb = to_eigen(b);
    for (size_t i = 0; i < ea.values.size(); i++) {
        ea.values[i] *= eb.values[i];
    }
    return ea;
}

}  // namespace pipcodes
