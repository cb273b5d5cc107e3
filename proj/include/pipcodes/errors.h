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

#ifndef PIPCODES_ERRORS_H
#define PIPCODES_ERRORS_H

#include <stdexcept>
#include <string>

namespace pipcodes {

/// A channel, vector or operator failed a physical or structural check
/// (trace preservation, simplex membership, eigenvalue range, ...).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The eigenvalue vector is numerically fine but maps outside the
/// probability simplex, so it cannot come from a CP Pauli channel.
struct NonPhysicalError : ValidationError {
    using ValidationError::ValidationError;
};

/// A linear solve failed (singular or badly conditioned system).
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation refused to run because the problem size exceeds a
/// configured cap (dense dimension, fixed-set expansion, oracle cost).
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (JSON syntax, schema, Pauli grammar).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pipcodes

#endif
