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

#include "pipcodes/clifford.h"

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "pipcodes/errors.h"

namespace pipcodes {
namespace {

Gate random_gate(int n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> kind(0, n > 1 ? 5 : 4);
    std::uniform_int_distribution<int> qubit(1, n);
    int q = qubit(rng);
    switch (kind(rng)) {
        case 0:
            return Gate::h(q);
        case 1:
            return Gate::s(q);
        case 2:
            return Gate::pauli('X', q);
        case 3:
            return Gate::pauli('Y', q);
        case 4:
            return Gate::pauli('Z', q);
        default: {
            int t = qubit(rng);
            while (t == q) {
                t = qubit(rng);
            }
            return Gate::cnot(q, t);
        }
    }
}

CliffordCircuit random_circuit(int n, int length, std::mt19937_64 &rng) {
    CliffordCircuit c{n, {}};
    for (int i = 0; i < length; i++) {
        c.append(random_gate(n, rng));
    }
    return c;
}

oracle::CMatrix oracle_unitary(const CliffordCircuit &c) {
    int dim = 1 << c.n;
    oracle::CMatrix u = oracle::CMatrix::Identity(dim, dim);
    for (const Gate &g : c.gates) {
        u = oracle::gate_matrix(g.name(), c.n, g.target, g.control) * u;
    }
    return u;
}

TEST(Conjugate, Examples) {
    CliffordCircuit c{2, {}};
    c.append(Gate::cnot(2, 1));
    EXPECT_EQ(conjugate_pauli(c, parse_pauli("IX")), parse_pauli("XX"));
    EXPECT_EQ(conjugate_pauli(c, parse_pauli("IZ")), parse_pauli("IZ"));
    EXPECT_EQ(conjugate_pauli(Gate::h(1), parse_pauli("X")), parse_pauli("Z"));
    EXPECT_EQ(conjugate_pauli(Gate::s(1), parse_pauli("X")), parse_pauli("Y"));
    EXPECT_EQ(conjugate_pauli(Gate::s(1), parse_pauli("Y")), parse_pauli("-X"));
    EXPECT_EQ(conjugate_pauli(Gate::h(1), parse_pauli("Y")), parse_pauli("-Y"));
}

TEST(Circuit, AppendValidates) {
    CliffordCircuit c{2, {}};
    EXPECT_THROW(c.append(Gate::h(3)), std::invalid_argument);
    EXPECT_THROW(c.append(Gate::cnot(1, 1)), std::invalid_argument);
    EXPECT_THROW(c.append(Gate::cnot(0, 1)), std::invalid_argument);
    EXPECT_THROW(Gate::pauli('Q', 1), std::invalid_argument);
    EXPECT_THROW(conjugate_pauli(c, parse_pauli("X")), std::invalid_argument);
}

TEST(Conjugate, TableauMatchesDenseOnRandomCircuits) {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> pick_n(1, 3);
    for (int trial = 0; trial < 200; trial++) {
        int n = pick_n(rng);
        CliffordCircuit c = random_circuit(n, 12, rng);
        oracle::CMatrix u = oracle_unitary(c);
        for (const std::string &s : oracle::all_pauli_strings(n)) {
            PauliOp image = conjugate_pauli(c, parse_pauli(s));
            oracle::CMatrix dense = u * oracle::pauli_matrix(s) * u.adjoint();
            ASSERT_LT((oracle::pauli_matrix(image.str()) - dense).norm(), 1e-10) << s << " -> " << image.str();
        }
    }
}

TEST(Circuit, InverseUndoesConjugation) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 50; trial++) {
        CliffordCircuit c = random_circuit(4, 20, rng);
        CliffordCircuit inv = c.inverse();
        for (const std::string &s : {"XIYZ", "ZZII", "IYIX"}) {
            PauliOp p = parse_pauli(s);
            EXPECT_EQ(conjugate_pauli(inv, conjugate_pauli(c, p)), p);
        }
    }
}

TEST(Encoder, ExampleOneTriplet) {
    Triplet t = Triplet::from_pair(parse_pauli("XX"), parse_pauli("IZ"));
    CliffordCircuit enc = synthesize_encoder({t}, 2);
    EXPECT_EQ(conjugate_pauli(enc, parse_pauli("XI")), parse_pauli("XX"));
    EXPECT_EQ(conjugate_pauli(enc, parse_pauli("ZI")), parse_pauli("IZ"));
    // The textbook circuit with the logical qubit in slot 2 is one CNOT.
    CliffordCircuit slot_two{2, {}};
    slot_two.append(Gate::cnot(2, 1));
    EXPECT_EQ(conjugate_pauli(slot_two, parse_pauli("IX")), parse_pauli("XX"));
    EXPECT_EQ(conjugate_pauli(slot_two, parse_pauli("IZ")), parse_pauli("IZ"));
}

TEST(Encoder, StandardTripletsGiveEmptyCircuit) {
    EXPECT_TRUE(synthesize_encoder({Triplet::from_pair(parse_pauli("XI"), parse_pauli("ZI"))}, 2).gates.empty());
    for (int n = 1; n <= 5; n++) {
        std::vector<Triplet> ts;
        for (int q = 1; q <= n; q++) {
            ts.push_back(Triplet::from_pair(PauliOp::single(n, q, 'X'), PauliOp::single(n, q, 'Z')));
        }
        CliffordCircuit enc = synthesize_encoder(ts, n);
        EXPECT_TRUE(enc.gates.empty());
        for (int q = 1; q <= n; q++) {
            for (char c : std::string("XYZ")) {
                EXPECT_EQ(conjugate_pauli(enc, PauliOp::single(n, q, c)), PauliOp::single(n, q, c));
            }
        }
    }
}

TEST(Encoder, RoundTripOnRandomTriplets) {
    std::mt19937_64 rng(67);
    for (int n = 1; n <= 6; n++) {
        for (int trial = 0; trial < 20; trial++) {
            CliffordCircuit c = random_circuit(n, 30, rng);
            std::uniform_int_distribution<int> pick_k(1, n);
            int k = pick_k(rng);
            std::vector<Triplet> ts;
            for (int q = 1; q <= k; q++) {
                ts.push_back(Triplet::from_pair(conjugate_pauli(c, PauliOp::single(n, q, 'X')),
                                                conjugate_pauli(c, PauliOp::single(n, q, 'Z'))));
            }
            CliffordCircuit enc = synthesize_encoder(ts, n);
            for (int q = 1; q <= k; q++) {
                const Triplet &t = ts[static_cast<size_t>(q - 1)];
                ASSERT_EQ(conjugate_pauli(enc, PauliOp::single(n, q, 'X')), t.x_op);
                ASSERT_EQ(conjugate_pauli(enc, PauliOp::single(n, q, 'Z')), t.z_op);
                ASSERT_EQ(conjugate_pauli(enc, PauliOp::single(n, q, 'Y')), t.y_op);
            }
            // Symplectic form of all 2n generator images matches the preimages.
            std::vector<PauliOp> gens;
            for (int q = 1; q <= n; q++) {
                gens.push_back(PauliOp::single(n, q, 'X'));
                gens.push_back(PauliOp::single(n, q, 'Z'));
            }
            for (const PauliOp &a : gens) {
                for (const PauliOp &b : gens) {
                    ASSERT_EQ(commutes(conjugate_pauli(enc, a), conjugate_pauli(enc, b)), commutes(a, b));
                }
            }
        }
    }
}

TEST(Encoder, RejectsDependentPairs) {
    Triplet a = Triplet::from_pair(parse_pauli("XI"), parse_pauli("ZI"));
    Triplet b = Triplet::from_pair(parse_pauli("XI"), parse_pauli("YI"));
    EXPECT_THROW(synthesize_encoder({a, b}, 2), std::invalid_argument);
}

TEST(Completion, ProducesSymplecticBasis) {
    auto basis = symplectic_completion({{parse_pauli("XXI"), parse_pauli("IZI")}}, 3);
    ASSERT_EQ(basis.size(), 3u);
    EXPECT_EQ(basis[0].first, parse_pauli("XXI"));
    for (size_t i = 0; i < basis.size(); i++) {
        for (size_t j = 0; j < basis.size(); j++) {
            EXPECT_EQ(commutes(basis[i].first, basis[j].second), i != j);
            EXPECT_TRUE(commutes(basis[i].first, basis[j].first));
            EXPECT_TRUE(commutes(basis[i].second, basis[j].second));
        }
    }
}

CodeReport one_qubit_report(int sx, int sy, int sz) {
    CodeReport r;
    r.n = 1;
    r.mode = SearchMode::kUcs;
    r.fixed_classes = {{{0, 0, 0}, 1, 1}, {{0, 0, 1}, sz, double(sz)}, {{0, 1, 0}, sy, double(sy)}, {{1, 0, 0}, sx, double(sx)}};
    r.triplets = {Triplet::from_pair(parse_pauli("X"), parse_pauli("Z"))};
    r.logical_qubits = 1;
    return r;
}

TEST(Recovery, SignPatterns) {
    EXPECT_TRUE(synthesize_recovery(one_qubit_report(1, 1, 1)).gates.empty());
    EXPECT_EQ(pauli_layer_operator(synthesize_recovery(one_qubit_report(1, -1, -1))), parse_pauli("X"));
    EXPECT_EQ(pauli_layer_operator(synthesize_recovery(one_qubit_report(-1, -1, 1))), parse_pauli("Z"));
    EXPECT_EQ(pauli_layer_operator(synthesize_recovery(one_qubit_report(-1, 1, -1))), parse_pauli("Y"));
    EXPECT_THROW(synthesize_recovery(one_qubit_report(-1, -1, -1)), ValidationError);
}

TEST(Recovery, ExampleTwo) {
    PauliChannel ch(2);
    ch.add(parse_pauli("YX"), 0.5);
    ch.add(parse_pauli("XY"), 0.5);
    CodeReport r;
    r.n = 2;
    r.mode = SearchMode::kUcs;
    r.triplets = {Triplet::from_pair(parse_pauli("XX"), parse_pauli("IZ"))};
    r.logical_qubits = 1;
    CliffordCircuit rec = synthesize_recovery(ch, r);
    EXPECT_EQ(pauli_layer_operator(rec), parse_pauli("XY"));
    PauliChannel layer(2);
    layer.add(pauli_layer_operator(rec), 1.0);
    PauliChannel corrected = compose(layer, ch);
    for (const Triplet &t : r.triplets) {
        for (const PauliOp &g : {t.x_op, t.y_op, t.z_op}) {
            EXPECT_DOUBLE_EQ(exact_eigenvalue(corrected, g), 1.0);
        }
    }
}

TEST(Recovery, NonUnitEigenvalueRejected) {
    PauliChannel ch(1);
    ch.add(parse_pauli("I"), 0.9);
    ch.add(parse_pauli("X"), 0.1);
    CodeReport r = one_qubit_report(1, 1, 1);
    EXPECT_THROW(synthesize_recovery(ch, r), ValidationError);
}

}  // namespace
}  // namespace pipcodes
