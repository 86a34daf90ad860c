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

#include "qae/amplitude_estimation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qae/error.hpp"

namespace qae {
namespace {

void check_eval_qubits(std::size_t n) {
  if (n == 0) throw DomainError("at least one evaluation qubit is required");
  if (n > kMaxEvalQubits) {
    throw CapabilityError("evaluation register of " + std::to_string(n) +
                          " qubits exceeds " + std::to_string(kMaxEvalQubits));
  }
}

}  // namespace

double theta_from_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1]");
  return 2.0 * std::asin(std::sqrt(p));
}

QaeProblem make_problem(double p, std::size_t eval_qubits) {
  check_eval_qubits(eval_qubits);
  return QaeProblem{p, eval_qubits, theta_from_p(p)};
}

Circuit build_qae(const QaeProblem& problem) {
  check_eval_qubits(problem.eval_qubits);
  const std::size_t n = problem.eval_qubits;
  const Qubit objective = problem.objective();
  Circuit c(n + 1, n);

  c.ry(problem.theta, objective);
  for (Qubit j = 0; j < n; ++j) c.h(j);
  for (Qubit j = 0; j < n; ++j) {
    const double power = std::ldexp(1.0, static_cast<int>(n - 1 - j));
    c.cry(2.0 * power * problem.theta, j, objective);
  }
  for (Qubit j = 0; j < n; ++j) {
    for (Qubit k = 0; k < j; ++k) {
      c.cp(-std::numbers::pi / std::ldexp(1.0, static_cast<int>(j - k)), k, j);
    }
    c.h(j);
  }
  for (Qubit j = 0; j < n; ++j) c.measure(j, j);
  return c;
}

std::vector<double> estimate_grid(std::size_t eval_qubits) {
  check_eval_qubits(eval_qubits);
  const std::uint64_t half = std::uint64_t{1} << (eval_qubits - 1);
  std::vector<double> grid;
  grid.reserve(half + 1);
  for (std::uint64_t k = 0; k <= half; ++k) {
    grid.push_back(outcome_to_estimate(k, eval_qubits));
  }
  return grid;
}

double outcome_to_estimate(std::uint64_t z, std::size_t eval_qubits) {
  check_eval_qubits(eval_qubits);
  const std::uint64_t m = std::uint64_t{1} << eval_qubits;
  if (z >= m) {
    throw DomainError("outcome " + std::to_string(z) + " out of range for " +
                      std::to_string(eval_qubits) + " evaluation qubits");
  }
  // Evaluate on the folded index so z and M - z agree bit for bit.
  const std::uint64_t k = std::min(z, m - z);
  const double s = std::sin(std::numbers::pi * static_cast<double>(k) /
                            static_cast<double>(m));
  return s * s;
}

std::uint64_t fold_outcome(std::uint64_t z, std::size_t eval_qubits) {
  check_eval_qubits(eval_qubits);
  const std::uint64_t m = std::uint64_t{1} << eval_qubits;
  if (z >= m) throw DomainError("outcome out of range");
  return std::min(z, m - z);
}

double error_bound(std::uint64_t grid_size) {
  if (grid_size < 2 || !std::has_single_bit(grid_size)) {
    throw DomainError("grid size must be a power of two >= 2");
  }
  const double m = static_cast<double>(grid_size);
  return std::numbers::pi / m + std::numbers::pi * std::numbers::pi / (m * m);
}

}  // namespace qae
