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

#include "pipcodes/verify.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.h"
#include "pipcodes/errors.h"
#include "pipcodes/twirl.h"

namespace pipcodes {
namespace {

PauliChannel pauli_channel(int n, const std::vector<std::pair<std::string, double>> &terms) {
    PauliChannel ch(n);
    for (const auto &[s, p] : terms) {
        ch.add(parse_pauli(s), p);
    }
    return ch;
}

PIPChannel pip_of(const PauliChannel &ch) { return permutation_twirl(ch); }

CVector random_state(int n, std::mt19937_64 &rng) {
    return oracle::random_unitary(1 << n, rng).col(0);
}

double ptm_distance_to_identity(const GeneralChannel &ch) {
    Eigen::MatrixXd r = pauli_transfer_matrix(ch);
    return (r - Eigen::MatrixXd::Identity(r.rows(), r.cols())).cwiseAbs().maxCoeff();
}

TEST(DensityMatrix, Constructors) {
    CVector psi = CVector::Zero(4);
    psi(0) = psi(3) = 1 / std::sqrt(2.0);
    DensityMatrix bell = DensityMatrix::pure(2, psi);
    EXPECT_TRUE(bell.is_valid());
    EXPECT_TRUE(DensityMatrix::maximally_mixed(3).is_valid());
    DensityMatrix bad = bell;
    bad.entries(0, 0) += 0.1;
    EXPECT_FALSE(bad.is_valid());
    DensityMatrix neg{1, CMatrix::Zero(2, 2)};
    neg.entries(0, 0) = 1.5;
    neg.entries(1, 1) = -0.5;
    EXPECT_FALSE(neg.is_valid());
}

TEST(ApplyChannel, Examples) {
    CVector zero = CVector::Zero(2);
    zero(0) = 1;
    DensityMatrix out = apply_channel(GeneralChannel::unitary(1, oracle::pauli_matrix("X")), DensityMatrix::pure(1, zero));
    EXPECT_NEAR(out.entries(1, 1).real(), 1, 1e-15);
    EXPECT_NEAR(std::abs(out.entries(0, 0)), 0, 1e-15);

    CVector phi = CVector::Zero(4);
    phi(0) = phi(3) = 1 / std::sqrt(2.0);
    DensityMatrix bell = DensityMatrix::pure(2, phi);
    DensityMatrix kept = apply_channel(pauli_channel(2, {{"II", 0.5}, {"ZZ", 0.5}}), bell);
    EXPECT_LT((kept.entries - bell.entries).norm(), 1e-12);

    std::mt19937_64 rng(71);
    PauliChannel full = pauli_channel(1, {{"I", 0.25}, {"X", 0.25}, {"Y", 0.25}, {"Z", 0.25}});
    DensityMatrix mixed = apply_channel(full, DensityMatrix::pure(1, random_state(1, rng)));
    EXPECT_LT((mixed.entries - CMatrix::Identity(2, 2) / 2.0).norm(), 1e-12);
}

TEST(ApplyChannel, PreservesTraceAndHermiticity) {
    std::mt19937_64 rng(73);
    for (int n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 10; trial++) {
            GeneralChannel ch{n, oracle::random_kraus(n, 3, rng)};
            DensityMatrix out = apply_channel(ch, DensityMatrix::pure(n, random_state(n, rng)));
            EXPECT_NEAR(out.entries.trace().real(), 1, 1e-9);
            EXPECT_LT((out.entries - out.entries.adjoint()).norm(), 1e-9);
            EXPECT_TRUE(out.is_valid());
        }
    }
    EXPECT_THROW(apply_channel(GeneralChannel::identity(6), DensityMatrix::maximally_mixed(6)), CapError);
}

TEST(CircuitUnitary, MatchesGateProductOracle) {
    CliffordCircuit c{3, {}};
    c.append(Gate::h(1));
    c.append(Gate::cnot(1, 3));
    c.append(Gate::s(2));
    c.append(Gate::pauli('Y', 3));
    oracle::CMatrix u = oracle::CMatrix::Identity(8, 8);
    for (const Gate &g : c.gates) {
        u = oracle::gate_matrix(g.name(), 3, g.target, g.control) * u;
    }
    EXPECT_LT((circuit_unitary(c) - u).norm(), 1e-12);
}

TEST(Fidelity, Examples) {
    EXPECT_NEAR(average_gate_fidelity(GeneralChannel::identity(2)), 1, 1e-15);
    GeneralChannel dep = to_general(pauli_channel(1, {{"I", 0.8}, {"X", 0.2 / 3}, {"Y", 0.2 / 3}, {"Z", 0.2 / 3}}));
    EXPECT_NEAR(entanglement_fidelity(dep), 0.8, 1e-12);
    EXPECT_NEAR(average_gate_fidelity(dep), 13.0 / 15, 1e-12);
    GeneralChannel x = GeneralChannel::unitary(1, oracle::pauli_matrix("X"));
    EXPECT_NEAR(entanglement_fidelity(x), 0, 1e-15);
    EXPECT_NEAR(average_gate_fidelity(x), 1.0 / 3, 1e-15);
}

TEST(Fidelity, AgreesWithStabilizerStateAverage) {
    // The six single-qubit stabilizer states form a 2-design.
    std::vector<CVector> states;
    const Complex i(0, 1);
    const double h = 1 / std::sqrt(2.0);
    for (auto [a, b] : std::vector<std::pair<Complex, Complex>>{{1, 0}, {0, 1}, {h, h}, {h, -h}, {h, i * h}, {h, -i * h}}) {
        CVector v(2);
        v << a, b;
        states.push_back(v);
    }
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 10; trial++) {
        std::vector<oracle::CMatrix> kraus = oracle::random_kraus(1, 2, rng);
        double avg = 0;
        for (const CVector &v : states) {
            oracle::CMatrix rho = v * v.adjoint();
            oracle::CMatrix out = oracle::CMatrix::Zero(2, 2);
            for (const auto &a : kraus) {
                out += a * rho * a.adjoint();
            }
            avg += (v.adjoint() * out * v)(0, 0).real() / 6;
        }
        EXPECT_NEAR(average_gate_fidelity({1, kraus}), avg, 1e-12);
        EXPECT_LE(average_gate_fidelity({1, kraus}), 1 + 1e-9);
    }
}

// Independent logical-map oracle: encode sigma (x) I/d_B, apply the Kraus sum
// and recovery, decode, trace out B.
Eigen::MatrixXd oracle_logical_ptm(const std::vector<oracle::CMatrix> &kraus, const oracle::CMatrix &enc,
                                   const oracle::CMatrix &rec, int n, int k) {
    int dl = 1 << k;
    int db = 1 << (n - k);
    std::vector<std::string> ps = oracle::all_pauli_strings(k);
    Eigen::MatrixXd r(ps.size(), ps.size());
    for (size_t j = 0; j < ps.size(); j++) {
        oracle::CMatrix in = oracle::kron(oracle::pauli_matrix(ps[j]), oracle::CMatrix::Identity(db, db) / double(db));
        oracle::CMatrix out = oracle::CMatrix::Zero(in.rows(), in.cols());
        for (const auto &a : kraus) {
            oracle::CMatrix m = enc.adjoint() * rec * a * enc;
            out += m * in * m.adjoint();
        }
        oracle::CMatrix red = oracle::CMatrix::Zero(dl, dl);
        for (int x = 0; x < dl; x++) {
            for (int y = 0; y < dl; y++) {
                for (int b = 0; b < db; b++) {
                    red(x, y) += out(x * db + b, y * db + b);
                }
            }
        }
        for (size_t i = 0; i < ps.size(); i++) {
            r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                (oracle::pauli_matrix(ps[i]) * red).trace().real() / dl;
        }
    }
    return r;
}

TEST(LogicalChannel, MatchesDenseOracle) {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 5; trial++) {
        int n = 3;
        int k = 1 + trial % 2;
        std::vector<oracle::CMatrix> kraus = oracle::random_kraus(n, 2, rng);
        CliffordCircuit enc{n, {}};
        enc.append(Gate::h(1));
        enc.append(Gate::cnot(1, 2));
        enc.append(Gate::s(3));
        enc.append(Gate::cnot(3, 1));
        CliffordCircuit rec{n, {}};
        rec.append(Gate::pauli('Y', 2));
        GeneralChannel logical = logical_channel({n, kraus}, enc, rec, k);
        Eigen::MatrixXd expect = oracle_logical_ptm(kraus, circuit_unitary(enc), circuit_unitary(rec), n, k);
        EXPECT_LT((pauli_transfer_matrix(logical) - expect).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_TRUE(validate_channel(logical).valid);
    }
}

TEST(LogicalChannel, Examples) {
    PauliChannel ex1 = pauli_channel(2, {{"II", 0.5}, {"ZZ", 0.5}});
    CodeReport r1 = find_codes(pip_of(ex1), SearchMode::kNoiseless);
    CliffordCircuit enc1 = synthesize_encoder(r1.triplets, 2);
    CliffordCircuit none{2, {}};
    EXPECT_LT(ptm_distance_to_identity(logical_channel(to_general(ex1), enc1, none, 1)), 1e-10);

    PauliChannel ex2 = pauli_channel(2, {{"YX", 0.5}, {"XY", 0.5}});
    CodeReport r2 = find_codes(pip_of(ex2), SearchMode::kUcs);
    CliffordCircuit enc2 = synthesize_encoder(r2.triplets, 2);
    CliffordCircuit rec2 = synthesize_recovery(r2);
    EXPECT_LT(ptm_distance_to_identity(logical_channel(to_general(ex2), enc2, rec2, 1)), 1e-10);
    EXPECT_GT(ptm_distance_to_identity(logical_channel(to_general(ex2), enc2, none, 1)), 0.5);

    EXPECT_LT(ptm_distance_to_identity(logical_channel(GeneralChannel::identity(3), CliffordCircuit{3, {}},
                                                       CliffordCircuit{3, {}}, 2)),
              1e-12);
}

TEST(VerifyCode, Examples) {
    CMatrix u = std::cos(M_PI / 4) * oracle::pauli_matrix("II") + Complex(0, std::sin(M_PI / 4)) * oracle::pauli_matrix("ZZ");
    GeneralChannel rot = GeneralChannel::unitary(2, u);
    CodeReport r = find_codes(pip_twirl(rot), SearchMode::kNoiseless);
    ASSERT_EQ(r.logical_qubits, 1);
    CliffordCircuit enc = synthesize_encoder(r.triplets, 2);
    CliffordCircuit rec = synthesize_recovery(r);
    FidelityReport f = verify_code(rot, r, enc, rec);
    EXPECT_NEAR(f.avg_gate_fidelity, 1, 1e-9);
    EXPECT_NEAR(f.twirled_avg_gate_fidelity, 1, 1e-9);
    EXPECT_NEAR(f.worst_case_over_probes, 1, 1e-9);
    EXPECT_FALSE(f.theorem_violation);

    GeneralChannel ex1 = to_general(pauli_channel(2, {{"II", 0.5}, {"ZZ", 0.5}}));
    FidelityReport g = verify_code(ex1, r, enc, rec);
    EXPECT_NEAR(g.avg_gate_fidelity, 1, 1e-9);

    PauliChannel dep(2);
    for (uint64_t i = 0; i < 16; i++) {
        dep.add(pauli_from_index(2, i), i == 0 ? 0.85 : 0.01);
    }
    CodeReport manual;
    manual.n = 2;
    manual.triplets = {Triplet::from_pair(parse_pauli("XI"), parse_pauli("ZI"))};
    manual.logical_qubits = 1;
    FidelityReport d = verify_code(to_general(dep), manual, CliffordCircuit{2, {}}, CliffordCircuit{2, {}});
    EXPECT_LT(d.avg_gate_fidelity, 1 - 1e-3);

    CodeReport empty;
    empty.n = 2;
    EXPECT_THROW(verify_code(ex1, empty, enc, rec), ValidationError);
}

TEST(VerifyCode, TwirledFailureWithOriginalFailureIsNotAViolation) {
    // Pure amplitude damping on one qubit of a 2-qubit register: no code survives.
    CMatrix a0 = CMatrix::Zero(2, 2);
    CMatrix a1 = CMatrix::Zero(2, 2);
    a0(0, 0) = 1;
    a0(1, 1) = 0.8;
    a1(0, 1) = 0.6;
    GeneralChannel ad{2, {kron(a0, CMatrix::Identity(2, 2)), kron(a1, CMatrix::Identity(2, 2))}};
    CodeReport manual;
    manual.n = 2;
    manual.triplets = {Triplet::from_pair(parse_pauli("IX"), parse_pauli("IZ"))};
    manual.logical_qubits = 1;
    CliffordCircuit none{2, {}};
    CliffordCircuit swap{2, {}};
    swap.append(Gate::cnot(1, 2));
    swap.append(Gate::cnot(2, 1));
    swap.append(Gate::cnot(1, 2));
    FidelityReport f = verify_code(ad, manual, swap, none);
    // Logical qubit sits on the undamaged qubit.
    EXPECT_NEAR(f.avg_gate_fidelity, 1, 1e-12);
    FidelityReport g = verify_code(ad, manual, none, none);
    EXPECT_LT(g.avg_gate_fidelity, 0.99);
    EXPECT_LT(g.twirled_avg_gate_fidelity, 0.99);
    EXPECT_FALSE(g.theorem_violation);
}

TEST(Estimator, IdentityChannelIsExact) {
    EstimationResult r = mc_estimate_eigenvalue(GeneralChannel::identity(2), {1, 0, 1}, 1000, 5);
    EXPECT_DOUBLE_EQ(r.estimate, 1);
    EXPECT_DOUBLE_EQ(r.std_error, 0);
    EXPECT_EQ(r.samples, 1000);
    EXPECT_EQ(r.seed, 5u);
}

TEST(Estimator, ExampleOneAndDepolarizing) {
    PauliChannel ex1 = pauli_channel(2, {{"II", 0.5}, {"ZZ", 0.5}});
    EstimationResult a = mc_estimate_eigenvalue(ex1, {1, 0, 0}, 10000, 2024);
    EXPECT_LE(std::abs(a.estimate - 0), 3 * a.std_error);
    PauliChannel dep = pauli_channel(1, {{"I", 0.9}, {"X", 0.1 / 3}, {"Y", 0.1 / 3}, {"Z", 0.1 / 3}});
    EstimationResult b = mc_estimate_eigenvalue(dep, {1, 0, 0}, 10000, 2024);
    EXPECT_LE(std::abs(b.estimate - 13.0 / 15), 3 * b.std_error);
    EXPECT_GT(b.std_error, 0);
}

TEST(Estimator, SeededAndReproducible) {
    std::mt19937_64 rng(89);
    GeneralChannel ch{2, oracle::random_kraus(2, 2, rng)};
    EstimationResult a = mc_estimate_eigenvalue(ch, {1, 1, 0}, 4001, 99);
    EstimationResult b = mc_estimate_eigenvalue(ch, {1, 1, 0}, 4001, 99);
    EstimationResult c = mc_estimate_eigenvalue(ch, {1, 1, 0}, 4001, 100);
    EXPECT_EQ(a.estimate, b.estimate);
    EXPECT_EQ(a.std_error, b.std_error);
    EXPECT_NE(a.estimate, c.estimate);
    EXPECT_THROW(mc_estimate_eigenvalue(ch, {1, 1, 0}, 1, 0), std::invalid_argument);
    EXPECT_THROW(mc_estimate_eigenvalue(ch, {2, 1, 0}, 100, 0), std::invalid_argument);
}

TEST(Estimator, UnbiasedForBothReadouts) {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 4; trial++) {
        GeneralChannel ch{2, oracle::random_kraus(2, 2, rng)};
        PIPChannel eig = to_eigen(pip_twirl(ch));
        for (const WeightClass &w : ClassIndex(2)) {
            double exact = eig.value(w);
            for (Readout ro : {Readout::kSingleShot, Readout::kExpectation}) {
                EstimationResult r = mc_estimate_eigenvalue(ch, w, 20000, 7 + trial, ro);
                // 4 sigma keeps the false-failure rate negligible across 80 checks.
                EXPECT_LE(std::abs(r.estimate - exact), 4 * r.std_error + 1e-12) << w.str();
                EXPECT_GE(r.std_error, 0);
                EXPECT_LE(r.estimate, 1 + 3 * r.std_error + 1e-12);
                EXPECT_GE(r.estimate, -1 - 3 * r.std_error - 1e-12);
            }
        }
    }
}

TEST(Estimator, StandardErrorScalesWithSamples) {
    PauliChannel dep = pauli_channel(1, {{"I", 0.9}, {"X", 0.1 / 3}, {"Y", 0.1 / 3}, {"Z", 0.1 / 3}});
    EstimationResult a = mc_estimate_eigenvalue(dep, {0, 0, 1}, 20000, 1);
    EstimationResult b = mc_estimate_eigenvalue(dep, {0, 0, 1}, 40000, 2);
    EXPECT_NEAR(b.std_error / a.std_error, 1 / std::sqrt(2.0), 0.05);
}

}  // namespace
}  // namespace pipcodes
