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

#include "pipcodes/code_finder.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "pipcodes/errors.h"

namespace pipcodes {

SearchMode parse_search_mode(const std::string &name) {
    if (name == "noiseless") {
        return SearchMode::kNoiseless;
    }
    if (name == "ucs") {
        return SearchMode::kUcs;
    }
    throw std::invalid_argument("unknown search mode '" + name + "' (expected noiseless or ucs)");
}

const char *search_mode_name(SearchMode mode) { return mode == SearchMode::kNoiseless ? "noiseless" : "ucs"; }

Triplet Triplet::from_pair(const PauliOp &x, const PauliOp &z) {
    if (commutes(x, z)) {
        throw std::invalid_argument("triplet generators " + x.str() + " and " + z.str() + " commute");
    }
    PauliOp xh = x.phaseless();
    PauliOp zh = z.phaseless();
    return {xh, multiply(xh, zh).times_i(1), zh};
}

bool Triplet::satisfies_su2() const {
    if (!x_op.is_hermitian() || !y_op.is_hermitian() || !z_op.is_hermitian()) {
        return false;
    }
    return multiply(x_op, y_op) == z_op.times_i(1) && multiply(y_op, z_op) == x_op.times_i(1) &&
           multiply(z_op, x_op) == y_op.times_i(1);
}

std::string Triplet::str() const { return x_op.str() + "/" + y_op.str() + "/" + z_op.str(); }

int CodeReport::sign_of(const PauliOp &op) const {
    WeightClass w = weight_class(op);
    for (const FixedClass &c : fixed_classes) {
        if (c.w == w) {
            return c.sign;
        }
    }
    throw std::invalid_argument(op.str() + " is not in a fixed class");
}

std::string CodeReport::summary() const {
    std::string out = std::to_string(logical_qubits) + (logical_qubits == 1 ? " logical qubit" : " logical qubits");
    for (size_t i = 0; i < triplets.size(); i++) {
        out += (i == 0 ? "; triplet " : ", ") + triplets[i].str();
    }
    return out;
}

std::vector<FixedClass> fixed_classes(const PIPChannel &ch, SearchMode mode, double tol) {
    PIPChannel eigen = to_eigen(ch);
    ClassIndex index(ch.n);
    std::vector<FixedClass> out;
    for (size_t i = 0; i < index.size(); i++) {
        double lambda = eigen.values[i];
        if (i == 0) {
            out.push_back({index[i], +1, 1.0});
            continue;
        }
        if (lambda >= 1 - tol) {
            out.push_back({index[i], +1, lambda});
        } else if (mode == SearchMode::kUcs && lambda <= -1 + tol) {
            out.push_back({index[i], -1, lambda});
        }
    }
    return out;
}

std::vector<PauliOp> expand_fixed_set(int n, const std::vector<FixedClass> &classes, int cap) {
    if (n > cap) {
        throw CapError(
            "expand_fixed_set: " + std::to_string(n) + " qubits exceeds the expansion cap of " + std::to_string(cap) +
            " qubits");
    }
    std::vector<PauliOp> out;
    for (const FixedClass &c : classes) {
        if (c.w.is_identity()) {
            continue;
        }
        for_each_in_class(n, c.w, [&](const PauliOp &p) { out.push_back(p); });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TripletSearch find_triplets(const std::vector<PauliOp> &fixed) {
    std::vector<PauliOp> pool;
    pool.reserve(fixed.size());
    for (const PauliOp &p : fixed) {
        pool.push_back(p.phaseless());
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    TripletSearch result;
    while (true) {
        std::unordered_set<PauliOp, PauliOpHash> members(pool.begin(), pool.end());
        bool accepted = false;
        for (size_t i = 0; i < pool.size() && !accepted; i++) {
            for (size_t j = i + 1; j < pool.size(); j++) {
                const PauliOp &a = pool[i];
                const PauliOp &b = pool[j];
                if (commutes(a, b)) {
                    continue;
                }
                PauliOp product = multiply(a, b).phaseless();
                if (members.count(product) == 0) {
                    continue;
                }
                Triplet t = Triplet::from_pair(b, a);
                std::vector<PauliOp> kept;
                for (const PauliOp &p : pool) {
                    if (p == a || p == b || p == product) {
                        continue;
                    }
                    if (commutes(p, a) && commutes(p, b)) {
                        kept.push_back(p);
                    }
                }
                result.triplets.push_back(t);
                pool.swap(kept);
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            break;
        }
    }
    result.residual = pool;
    return result;
}

CodeReport find_codes(const PIPChannel &ch, SearchMode mode, double tol, int cap) {
    CodeReport report;
    report.n = ch.n;
    report.mode = mode;
    report.tol = tol;
    report.channel = to_eigen(ch);
    report.fixed_classes = fixed_classes(report.channel, mode, tol);
    std::vector<PauliOp> fixed = expand_fixed_set(ch.n, report.fixed_classes, cap);

    report.fixed_paulis.push_back({PauliOp(ch.n), +1});
    for (const PauliOp &p : fixed) {
        report.fixed_paulis.push_back({p, report.sign_of(p)});
    }

    TripletSearch search = find_triplets(fixed);
    report.triplets = std::move(search.triplets);
    report.residual = std::move(search.residual);
    report.logical_qubits = static_cast<int>(report.triplets.size());
    return report;
}

}  // namespace pipcodes
