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

#include "pipcodes/channels.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pipcodes/errors.h"

namespace pipcodes {

namespace {

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

void check_size(int n, const PauliOp &q) {
    if (q.n_qubits() != n) {
        throw std::invalid_argument(
            "Pauli " + q.str() + " has " + std::to_string(q.n_qubits()) + " qubits, channel has " + std::to_string(n));
    }
}

}  // namespace

GeneralChannel GeneralChannel::identity(int n) {
    auto dim = Eigen::Index{1} << n;
    return {n, {CMatrix::Identity(dim, dim)}};
}

GeneralChannel GeneralChannel::unitary(int n, const CMatrix &u) { return {n, {u}}; }

bool PauliChannel::add(const PauliOp &p, double prob) {
    check_size(n, p);
    probs[p.phaseless()] += prob;
    return p.phase_exp() == 0;
}

double PauliChannel::prob(const PauliOp &p) const {
    auto it = probs.find(p.phaseless());
    return it == probs.end() ? 0.0 : it->second;
}

double PauliChannel::total() const {
    double s = 0;
    for (const auto &[p, v] : probs) {
        s += v;
    }
    return s;
}

PauliChannel PauliChannel::identity(int n) {
    PauliChannel ch(n);
    ch.add(PauliOp(n), 1.0);
    return ch;
}

ValidationReport validate_channel(const GeneralChannel &ch) {
    ValidationReport r;
    if (ch.n < 1) {
        r.valid = false;
        r.issues.push_back("qubit count must be positive");
        return r;
    }
    auto dim = Eigen::Index{1} << ch.n;
    if (ch.kraus.empty()) {
        r.valid = false;
        r.issues.push_back("no Kraus operators");
        return r;
    }
    CMatrix sum = CMatrix::Zero(dim, dim);
    for (size_t k = 0; k < ch.kraus.size(); k++) {
        const CMatrix &a = ch.kraus[k];
        if (a.rows() != dim || a.cols() != dim) {
            r.valid = false;
            r.issues.push_back(
                "Kraus operator " + std::to_string(k) + " is " + std::to_string(a.rows()) + "x" +
                std::to_string(a.cols()) + ", expected " + std::to_string(dim) + "x" + std::to_string(dim));
            return r;
        }
        sum += a.adjoint() * a;
    }
    // Complete positivity holds by construction of a Kraus sum.
    r.tp_defect = (sum - CMatrix::Identity(dim, dim)).norm();
    if (r.tp_defect > kTraceTol) {
        r.valid = false;
        r.issues.push_back("not trace preserving: ||sum A^dag A - I||_F = " + fmt(r.tp_defect));
    }
    return r;
}

ValidationReport validate_channel(const PauliChannel &ch) {
    ValidationReport r;
    double total = 0;
    for (const auto &[p, v] : ch.probs) {
        if (p.n_qubits() != ch.n) {
            r.valid = false;
            r.issues.push_back("term " + p.str() + " has the wrong qubit count");
        }
        if (v < 0) {
            r.range_defect = std::max(r.range_defect, -v);
        }
        total += v;
    }
    if (r.range_defect > kClampTol) {
        r.valid = false;
        r.issues.push_back("negative probability, defect " + fmt(r.range_defect));
    }
    r.sum_defect = std::abs(total - 1);
    if (r.sum_defect > kSimplexTol) {
        r.valid = false;
        r.issues.push_back("probabilities sum to " + fmt(total) + ", defect " + fmt(r.sum_defect));
    }
    return r;
}

ValidationReport validate_channel(const PIPChannel &ch) {
    ValidationReport r;
    if (ch.n < 1 || static_cast<int64_t>(ch.values.size()) != class_count(ch.n)) {
        r.valid = false;
        r.issues.push_back("expected " + std::to_string(ch.n >= 1 ? class_count(ch.n) : 0) + " class values");
        return r;
    }
    ClassIndex index(ch.n);
    if (ch.rep == Rep::kProb) {
        double total = 0;
        for (size_t i = 0; i < ch.values.size(); i++) {
            double v = ch.values[i];
            if (v < 0) {
                r.range_defect = std::max(r.range_defect, -v);
            } else if (v > 1) {
                r.range_defect = std::max(r.range_defect, v - 1);
            }
            total += v;
        }
        if (r.range_defect > kSimplexTol) {
            r.valid = false;
            r.issues.push_back("class probability outside [0,1], defect " + fmt(r.range_defect));
        }
        r.sum_defect = std::abs(total - 1);
        if (r.sum_defect > kSimplexTol) {
            r.valid = false;
            r.issues.push_back("class probabilities sum to " + fmt(total) + ", defect " + fmt(r.sum_defect));
        }
        return r;
    }
    for (size_t i = 0; i < ch.values.size(); i++) {
        double excess = std::abs(ch.values[i]) - 1;
        if (excess > 0) {
            r.range_defect = std::max(r.range_defect, excess);
            if (excess > kSimplexTol) {
                r.valid = false;
                r.issues.push_back("eigenvalue " + fmt(ch.values[i]) + " for class " + index[i].str() + " outside [-1,1]");
            }
        }
    }
    if (std::abs(ch.values[0] - 1) > kSimplexTol) {
        r.valid = false;
        r.sum_defect = std::abs(ch.values[0] - 1);
        r.issues.push_back("eigenvalue of class (0,0,0) must be 1, got " + fmt(ch.values[0]));
    }
    if (r.valid) {
        try {
            convert_representation(ch, Rep::kProb);
        } catch (const NonPhysicalError &e) {
            r.valid = false;
            r.issues.push_back(e.what());
        } catch (const NumericalError &e) {
            r.valid = false;
            r.issues.push_back(e.what());
        }
    }
    return r;
}

PauliChannel chi_diagonal(const GeneralChannel &ch, int cap) {
    check_dense_cap(ch.n, cap, "chi_diagonal");
    uint64_t count = uint64_t{1} << (2 * ch.n);
    double dim = std::ldexp(1.0, ch.n);
    PauliChannel out(ch.n);
    for (uint64_t i = 0; i < count; i++) {
        PauliOp p = pauli_from_index(ch.n, i);
        double mass = 0;
        for (const CMatrix &a : ch.kraus) {
            mass += std::norm(trace_with_pauli(p, a) / dim);
        }
        if (mass > 1e-15) {
            out.probs.emplace(p, mass);
        }
    }
    return out;
}

double exact_eigenvalue(const PauliChannel &ch, const PauliOp &q) {
    check_size(ch.n, q);
    double lambda = 0;
    for (const auto &[p, v] : ch.probs) {
        lambda += commutes(p, q) ? v : -v;
    }
    return lambda;
}

double exact_eigenvalue(const PIPChannel &ch, const PauliOp &q) {
    check_size(ch.n, q);
    WeightClass w = weight_class(q);
    if (ch.rep == Rep::kEigen) {
        return ch.value(w);
    }
    Eigen::VectorXd column = omega_column(ch.n, w);
    double lambda = 0;
    for (size_t i = 0; i < ch.values.size(); i++) {
        lambda += ch.values[i] * column(static_cast<Eigen::Index>(i));
    }
    return lambda;
}

PauliChannel expand_pip(const PIPChannel &ch) {
    PIPChannel prob = to_prob(ch);
    ClassIndex index(ch.n);
    PauliChannel out(ch.n);
    for (size_t i = 0; i < index.size(); i++) {
        double mass = prob.values[i];
        if (mass == 0) {
            continue;
        }
        double share = mass / class_size(ch.n, index[i]);
        for_each_in_class(ch.n, index[i], [&](const PauliOp &p) { out.probs.emplace(p, share); });
    }
    return out;
}

GeneralChannel to_general(const PauliChannel &ch) {
    GeneralChannel out{ch.n, {}};
    for (const auto &[p, v] : ch.probs) {
        if (v > 0) {
            out.kraus.push_back(std::sqrt(v) * pauli_matrix(p));
        }
    }
    if (out.kraus.empty()) {
        auto dim = Eigen::Index{1} << ch.n;
        out.kraus.push_back(CMatrix::Zero(dim, dim));
    }
    return out;
}

PauliChannel compose(const PauliChannel &a, const PauliChannel &b) {
    if (a.n != b.n) {
        throw std::invalid_argument("compose: qubit count mismatch");
    }
    PauliChannel out(a.n);
    for (const auto &[pa, va] : a.probs) {
        for (const auto &[pb, vb] : b.probs) {
            out.probs[multiply(pa, pb).phaseless()] += va * vb;
        }
    }
    return out;
}

PauliOp pauli_from_index(int n, uint64_t index) {
    uint64_t x = 0;
    uint64_t z = 0;
    for (int q = n; q >= 1; q--) {
        uint64_t bit = uint64_t{1} << (q - 1);
        switch (index & 3) {
            case 1:
                x |= bit;
                break;
            case 2:
                x |= bit;
                z |= bit;
                break;
            case 3:
                z |= bit;
                break;
            default:
                break;
        }
        index >>= 2;
    }
    return PauliOp(n, x, z);
}

Eigen::MatrixXd pauli_transfer_matrix(const GeneralChannel &ch, int cap) {
    check_dense_cap(ch.n, cap, "pauli_transfer_matrix");
    auto count = Eigen::Index{1} << (2 * ch.n);
    double dim = std::ldexp(1.0, ch.n);
    Eigen::MatrixXd r(count, count);
    for (Eigen::Index j = 0; j < count; j++) {
        CMatrix pj = pauli_matrix(pauli_from_index(ch.n, static_cast<uint64_t>(j)));
        CMatrix image = CMatrix::Zero(pj.rows(), pj.cols());
        for (const CMatrix &a : ch.kraus) {
            image += a * pj * a.adjoint();
        }
        for (Eigen::Index i = 0; i < count; i++) {
            r(i, j) = trace_with_pauli(pauli_from_index(ch.n, static_cast<uint64_t>(i)), image).real() / dim;
        }
    }
    return r;
}

Eigen::MatrixXd pauli_transfer_matrix(const PauliChannel &ch, int cap) {
    check_dense_cap(ch.n, cap, "pauli_transfer_matrix");
    auto count = Eigen::Index{1} << (2 * ch.n);
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(count, count);
    for (Eigen::Index i = 0; i < count; i++) {
        r(i, i) = exact_eigenvalue(ch, pauli_from_index(ch.n, static_cast<uint64_t>(i)));
    }
    return r;
}

}  // namespace pipcodes
