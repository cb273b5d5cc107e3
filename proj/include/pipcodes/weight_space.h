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

#ifndef PIPCODES_WEIGHT_SPACE_H
#define PIPCODES_WEIGHT_SPACE_H

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <vector>

#include "pipcodes/pauli.h"

namespace pipcodes {

/// K_n = (n+1)(n+2)(n+3)/6, the number of weight classes on n qubits.
/// Throws std::invalid_argument for n < 1.
int64_t class_count(int n);

/// All weight classes for n qubits in canonical order: ascending
/// (W, wx, wy, wz) with W the total weight. Class (0,0,0) is index 0.
class ClassIndex {
   public:
    explicit ClassIndex(int n);

    int n_qubits() const { return n_; }
    size_t size() const { return classes_.size(); }
    const WeightClass &operator[](size_t index) const { return classes_[index]; }
    /// Throws std::invalid_argument for classes that do not fit.
    size_t index_of(const WeightClass &w) const;
    const std::vector<WeightClass> &classes() const { return classes_; }

    auto begin() const { return classes_.begin(); }
    auto end() const { return classes_.end(); }

   private:
    int n_;
    std::vector<WeightClass> classes_;
    std::map<WeightClass, size_t> lookup_;
};

enum class CountMethod {
    /// Enumeration for n <= kEnumerationLimit, generating function above.
    kAuto,
    /// Walk every Pauli of class v against the class-w representative.
    kEnumerate,
    /// Coefficient extraction from a product of per-letter linear factors.
    kGeneratingFunction,
};

/// Largest n for which kAuto picks enumeration.
inline constexpr int kEnumerationLimit = 8;

/// Number of phaseless Paulis in class v that anticommute with the canonical
/// representative of class w. Representative-independent by permutation
/// symmetry.
uint64_t anticommute_count(int n, const WeightClass &v, const WeightClass &w, CountMethod method = CountMethod::kAuto);

/// Signed count  sum_{P in v} (+1 if P commutes with rep(w) else -1)  for every
/// class v at once, indexed by ClassIndex(n). Exact for n <= kMaxQubits.
std::vector<__int128> commutation_sign_sums(int n, const WeightClass &w);

/// Omega matrix, rows = applied class v, columns = observed class w, both in
/// ClassIndex order:  entry(v,w) = 1 - 2 A(v,w) / |class v|.
///
/// For a PIP channel with class masses p, the eigenvalue of class w is
/// lambda_w = sum_v p_v entry(v,w), i.e. lambda = Omega^T p.
struct OmegaMatrix {
    int n = 0;
    Eigen::MatrixXd entries;

    double operator()(const WeightClass &v, const WeightClass &w) const;
};

/// Largest n accepted by omega_matrix (K_n^2 entries of dense storage).
inline constexpr int kOmegaMaxQubits = 24;

/// Throws CapError above kOmegaMaxQubits.
OmegaMatrix omega_matrix(int n, CountMethod method = CountMethod::kAuto);

/// Column w of the Omega matrix (one entry per class v).
Eigen::VectorXd omega_column(int n, const WeightClass &w);

enum class Rep { kProb, kEigen };

const char *rep_name(Rep rep);

/// Permutation-invariant Pauli channel: one value per weight class in
/// ClassIndex order, either class probability masses or eigenvalues.
struct PIPChannel {
    int n = 0;
    Rep rep = Rep::kProb;
    std::vector<double> values;

    double value(const WeightClass &w) const;
    /// Point mass on class (0,0,0) (prob rep).
    static PIPChannel identity(int n);
};

/// Tolerance for probability-simplex membership and eigenvalue range checks.
inline constexpr double kSimplexTol = 1e-9;

struct ConversionResult {
    PIPChannel channel;
    /// Reciprocal condition estimate of the solved system (1 for prob -> eigen).
    double rcond = 1;
};

/// prob -> eigen applies Omega^T; eigen -> prob solves Omega^T p = lambda by
/// LU with partial pivoting. Values within kSimplexTol outside [0,1] are
/// clamped. Throws NonPhysicalError when the solved probabilities leave
/// [-tol, 1+tol], NumericalError when the system is singular.
ConversionResult convert_representation(const PIPChannel &ch, Rep target);

PIPChannel to_eigen(const PIPChannel &ch);
PIPChannel to_prob(const PIPChannel &ch);

/// Composition a after b. Eigenvalues multiply elementwise; the result is in
/// eigen rep.
PIPChannel compose(const PIPChannel &a, const PIPChannel &b);

}  // namespace pipcodes

#endif
