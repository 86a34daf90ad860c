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
#include <initializer_list>
#include <string_view>
#include <vector>

namespace qae {

using Qubit = std::uint32_t;

/// Gate vocabulary shared by synthesis, lowering, routing and simulation.
/// Parameters are radians; the parameter order for U is (theta, phi, lambda).
enum class GateKind : std::uint8_t {
  H,
  X,
  SX,
  RZ,
  RX,
  RY,
  U,
  CX,
  CRY,
  CP,
  RXX,
  SWAP,
  MEASURE,
};

/// Lower-case QASM spelling ("h", "cx", "measure", ...).
std::string_view gate_name(GateKind kind);

std::size_t gate_arity(GateKind kind);
std::size_t gate_param_count(GateKind kind);

inline bool is_two_qubit(GateKind kind) { return gate_arity(kind) == 2; }

/// One gate application. For two-qubit controlled kinds qubits[0] is the
/// control and qubits[1] the target. `clbit` is meaningful only for MEASURE.
struct GateInstance {
  GateKind kind{GateKind::H};
  std::vector<Qubit> qubits;
  std::vector<double> params;
  std::uint32_t clbit = 0;

  bool operator==(const GateInstance&) const = default;
};

GateInstance make_gate(GateKind kind, std::initializer_list<Qubit> qubits,
                       std::initializer_list<double> params = {});

/// Ordered gate list over `width` qubits and `classical_width` bits.
/// Every appended gate is validated against the register sizes, so a
/// constructed Circuit always satisfies its structural invariants.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t width, std::size_t classical_width = 0);

  std::size_t width() const noexcept { return width_; }
  std::size_t classical_width() const noexcept { return classical_width_; }
  const std::vector<GateInstance>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  Circuit& append(GateInstance gate);
  Circuit& append(const Circuit& other);

  Circuit& h(Qubit q);
  Circuit& x(Qubit q);
  Circuit& sx(Qubit q);
  Circuit& rz(double angle, Qubit q);
  Circuit& rx(double angle, Qubit q);
  Circuit& ry(double angle, Qubit q);
  Circuit& u(double theta, double phi, double lambda, Qubit q);
  Circuit& cx(Qubit control, Qubit target);
  Circuit& cry(double angle, Qubit control, Qubit target);
  Circuit& cp(double angle, Qubit control, Qubit target);
  Circuit& rxx(double angle, Qubit a, Qubit b);
  Circuit& swap(Qubit a, Qubit b);
  Circuit& measure(Qubit q, std::uint32_t clbit);

  /// Copy of this circuit with every MEASURE removed.
  Circuit without_measurements() const;

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t width_ = 0;
  std::size_t classical_width_ = 0;
  std::vector<GateInstance> gates_;
};

/// Throws StructuralError unless `gate` is well formed for the given sizes.
void validate_gate(const GateInstance& gate, std::size_t width,
                   std::size_t classical_width);

std::size_t count_two_qubit_gates(const Circuit& circuit);

std::size_t count_gates(const Circuit& circuit, GateKind kind);

}  // namespace qae
