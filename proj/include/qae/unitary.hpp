// Copyright 2026 The qaescale Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "qae/circuit.hpp"

namespace qae {

using ComplexMatrix = Eigen::MatrixXcd;

/// Dense-matrix guard for circuit_unitary.
inline constexpr std::size_t kMaxUnitaryWidth = 12;

/// The gate's matrix on its own operands (2x2 or 4x4). For two-qubit gates
/// the local basis index is bit(qubits[0]) + 2 * bit(qubits[1]).
ComplexMatrix local_matrix(const GateInstance& gate);

/// Full 2^width x 2^width unitary of one gate, identity on untouched qubits.
/// Qubit 0 is the least-significant bit of the basis-state index.
ComplexMatrix gate_unitary(const GateInstance& gate, std::size_t width);

/// Product of gate unitaries in program order (later gates on the left).
/// Throws CapabilityError above kMaxUnitaryWidth and StructuralError when
/// the circuit contains measurements.
ComplexMatrix circuit_unitary(const Circuit& circuit);

/// min over phi of max|a - e^{i phi} b| <= tol, with phi taken from the
/// ratio at the largest-magnitude entry of b. False for mismatched shapes.
bool equivalent_up_to_global_phase(const ComplexMatrix& a,
                                   const ComplexMatrix& b, double tol);

/// Phase-aligned max-norm distance used by equivalent_up_to_global_phase.
double phase_aligned_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qae
