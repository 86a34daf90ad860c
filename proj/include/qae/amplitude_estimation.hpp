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
#include <cstdint>
#include <vector>

#include "qae/circuit.hpp"

namespace qae {

/// Amplitude-estimation instance: probability p encoded on one objective
/// qubit, estimated with `eval_qubits` evaluation qubits.
struct QaeProblem {
  double p = 0.0;
  std::size_t eval_qubits = 1;
  double theta = 0.0;  ///< 2 * asin(sqrt(p))

  std::size_t width() const noexcept { return eval_qubits + 1; }
  Qubit objective() const noexcept { return static_cast<Qubit>(eval_qubits); }
  std::uint64_t grid_size() const noexcept { return std::uint64_t{1} << eval_qubits; }
};

/// Largest supported evaluation register (the grid has 2^(n-1) + 1 points).
inline constexpr std::size_t kMaxEvalQubits = 30;

/// 2 * asin(sqrt(p)); DomainError outside [0, 1].
double theta_from_p(double p);

/// Validated problem with theta filled in.
QaeProblem make_problem(double p, std::size_t eval_qubits);

/// Amplitude-estimation circuit on eval_qubits + 1 qubits.
///
/// Layout: qubits 0..n-1 evaluate, qubit n is the objective. The circuit is
/// RY(theta) on the objective, H on every evaluation qubit, one CRY per
/// evaluation qubit, a swapless inverse QFT built from H and CP, and a
/// measurement of evaluation qubit j into classical bit j.
///
/// Evaluation qubit j controls Q^(2^(n-1-j)) with Q = RY(2 theta), i.e.
/// CRY(2^(n-j) * theta). Reversing the power assignment replaces the
/// bit-reversal SWAP layer of the textbook inverse QFT, so the measured
/// classical register reads the phase integer z directly.
Circuit build_qae(const QaeProblem& problem);

/// The distinct representable estimates sin^2(pi k / 2^n), k = 0..2^(n-1),
/// ascending.
std::vector<double> estimate_grid(std::size_t eval_qubits);

/// sin^2(pi z / 2^n). Outcomes z and 2^n - z give the same estimate.
double outcome_to_estimate(std::uint64_t z, std::size_t eval_qubits);

/// Grid index min(z, 2^n - z) of an outcome.
std::uint64_t fold_outcome(std::uint64_t z, std::size_t eval_qubits);

/// pi/M + pi^2/M^2 for grid size M = 2^n >= 2.
double error_bound(std::uint64_t grid_size);

}  // namespace qae
