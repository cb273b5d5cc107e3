# Copyright 2026 The pipcodes Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Pauli/permutation twirling and correctable-code search."""

from ._core import (
    CapError,
    ParseError,
    PauliOp,
    ValidationError,
    anticommute_count,
    average_gate_fidelity,
    class_count,
    class_index,
    commutes,
    eigen_to_prob,
    enumerate_class,
    find_codes,
    mc_estimate_eigenvalue,
    multiply,
    omega_matrix,
    pauli_twirl,
    permutation_twirl,
    prob_to_eigen,
    run_command,
    synthesize,
)

__all__ = [
    "CapError",
    "ParseError",
    "PauliOp",
    "ValidationError",
    "anticommute_count",
    "average_gate_fidelity",
    "class_count",
    "class_index",
    "commutes",
    "eigen_to_prob",
    "enumerate_class",
    "find_codes",
    "mc_estimate_eigenvalue",
    "multiply",
    "omega_matrix",
    "pauli_twirl",
    "permutation_twirl",
    "prob_to_eigen",
    "run_command",
    "synthesize",
]
