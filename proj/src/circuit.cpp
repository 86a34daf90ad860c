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

#include "qae/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qae/error.hpp"

namespace qae {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::SX: return "sx";
    case GateKind::RZ: return "rz";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::U: return "u";
    case GateKind::CX: return "cx";
    case GateKind::CRY: return "cry";
    case GateKind::CP: return "cp";
    case GateKind::RXX: return "rxx";
    case GateKind::SWAP: return "swap";
    case GateKind::MEASURE: return "measure";
  }
  throw StructuralError("unknown gate kind");
}

std::size_t gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CRY:
    case GateKind::CP:
    case GateKind::RXX:
    case GateKind::SWAP:
      return 2;
    case GateKind::H:
    case GateKind::X:
    case GateKind::SX:
    case GateKind::RZ:
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::U:
    case GateKind::MEASURE:
      return 1;
  }
  throw StructuralError("unknown gate kind");
}

std::size_t gate_param_count(GateKind kind) {
  switch (kind) {
    case GateKind::RZ:
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::CRY:
    case GateKind::CP:
    case GateKind::RXX:
      return 1;
    case GateKind::U:
      return 3;
    case GateKind::H:
    case GateKind::X:
    case GateKind::SX:
    case GateKind::CX:
    case GateKind::SWAP:
    case GateKind::MEASURE:
      return 0;
  }
  throw StructuralError("unknown gate kind");
}

GateInstance make_gate(GateKind kind, std::initializer_list<Qubit> qubits,
                       std::initializer_list<double> params) {
  return GateInstance{kind, std::vector<Qubit>(qubits),
                      std::vector<double>(params), 0};
}

void validate_gate(const GateInstance& gate, std::size_t width,
                   std::size_t classical_width) {
  const std::string name(gate_name(gate.kind));
  if (gate.qubits.size() != gate_arity(gate.kind)) {
    throw StructuralError(name + ": expected " +
                          std::to_string(gate_arity(gate.kind)) + " qubit(s)");
  }
  if (gate.params.size() != gate_param_count(gate.kind)) {
    throw StructuralError(name + ": expected " +
                          std::to_string(gate_param_count(gate.kind)) +
                          " parameter(s)");
  }
  for (Qubit q : gate.qubits) {
    if (q >= width) {
      throw StructuralError(name + ": qubit " + std::to_string(q) +
                            " out of range for width " + std::to_string(width));
    }
  }
  if (gate.qubits.size() == 2 && gate.qubits[0] == gate.qubits[1]) {
    throw StructuralError(name + ": operands must be distinct");
  }
  for (double p : gate.params) {
    if (!std::isfinite(p)) throw StructuralError(name + ": non-finite angle");
  }
  if (gate.kind == GateKind::MEASURE && gate.clbit >= classical_width) {
    throw StructuralError("measure: classical bit " +
                          std::to_string(gate.clbit) + " out of range");
  }
}

Circuit::Circuit(std::size_t width, std::size_t classical_width)
    : width_(width), classical_width_(classical_width) {}

Circuit& Circuit::append(GateInstance gate) {
  validate_gate(gate, width_, classical_width_);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.width_ > width_ || other.classical_width_ > classical_width_) {
    throw StructuralError("appended circuit is wider than the destination");
  }
  gates_.reserve(gates_.size() + other.gates_.size());
  for (const auto& g : other.gates_) gates_.push_back(g);
  return *this;
}

Circuit& Circuit::h(Qubit q) { return append(make_gate(GateKind::H, {q})); }
Circuit& Circuit::x(Qubit q) { return append(make_gate(GateKind::X, {q})); }
Circuit& Circuit::sx(Qubit q) { return append(make_gate(GateKind::SX, {q})); }

Circuit& Circuit::rz(double angle, Qubit q) {
  return append(make_gate(GateKind::RZ, {q}, {angle}));
}

Circuit& Circuit::rx(double angle, Qubit q) {
  return append(make_gate(GateKind::RX, {q}, {angle}));
}

Circuit& Circuit::ry(double angle, Qubit q) {
  return append(make_gate(GateKind::RY, {q}, {angle}));
}

Circuit& Circuit::u(double theta, double phi, double lambda, Qubit q) {
  return append(make_gate(GateKind::U, {q}, {theta, phi, lambda}));
}

Circuit& Circuit::cx(Qubit control, Qubit target) {
  return append(make_gate(GateKind::CX, {control, target}));
}

Circuit& Circuit::cry(double angle, Qubit control, Qubit target) {
  return append(make_gate(GateKind::CRY, {control, target}, {angle}));
}

Circuit& Circuit::cp(double angle, Qubit control, Qubit target) {
  return append(make_gate(GateKind::CP, {control, target}, {angle}));
}

Circuit& Circuit::rxx(double angle, Qubit a, Qubit b) {
  return append(make_gate(GateKind::RXX, {a, b}, {angle}));
}

Circuit& Circuit::swap(Qubit a, Qubit b) {
  return append(make_gate(GateKind::SWAP, {a, b}));
}

Circuit& Circuit::measure(Qubit q, std::uint32_t clbit) {
  GateInstance g = make_gate(GateKind::MEASURE, {q});
  g.clbit = clbit;
  return append(std::move(g));
}

Circuit Circuit::without_measurements() const {
  Circuit out(width_, classical_width_);
  for (const auto& g : gates_) {
    if (g.kind != GateKind::MEASURE) out.gates_.push_back(g);
  }
  return out;
}

std::size_t count_two_qubit_gates(const Circuit& circuit) {
  return static_cast<std::size_t>(
      std::count_if(circuit.gates().begin(), circuit.gates().end(),
                    [](const GateInstance& g) { return is_two_qubit(g.kind); }));
}

std::size_t count_gates(const Circuit& circuit, GateKind kind) {
  return static_cast<std::size_t>(
      std::count_if(circuit.gates().begin(), circuit.gates().end(),
                    [kind](const GateInstance& g) { return g.kind == kind; }));
}

}  // namespace qae
