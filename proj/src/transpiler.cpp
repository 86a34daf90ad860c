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

#include "qae/transpiler.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "qae/error.hpp"
#include "qae/unitary.hpp"

namespace qae {
namespace {

using std::numbers::pi;

// Rotations closer than this to zero are dropped from single-qubit rewrites.
constexpr double kAngleEpsilon = 1e-14;

// Reduce to (-pi, pi]; RZ(a) and RZ(a + 2 pi) differ only by global phase.
double wrap(double a) {
  a = std::remainder(a, 2 * pi);
  return a == -pi ? pi : a;
}

bool negligible(double a) { return std::abs(wrap(a)) < kAngleEpsilon; }

GateInstance one(GateKind kind, Qubit q, std::initializer_list<double> params = {}) {
  return make_gate(kind, {q}, params);
}

GateInstance two(GateKind kind, Qubit a, Qubit b, std::initializer_list<double> params = {}) {
  return make_gate(kind, {a, b}, params);
}

void lower_into(const GateInstance& gate, const NativeGateSet& target,
                std::vector<GateInstance>& out, int depth);

void lower_all(const std::vector<GateInstance>& gates, const NativeGateSet& target,
               std::vector<GateInstance>& out, int depth) {
  for (const auto& g : gates) lower_into(g, target, out, depth + 1);
}

std::vector<GateInstance> expand_two_qubit(const GateInstance& g, const NativeGateSet& target) {
  const Qubit a = g.qubits[0];
  const Qubit b = g.qubits[1];
  const bool iontrap = target.two_qubit_kind == GateKind::RXX;
  switch (g.kind) {
    case GateKind::CX:
      if (iontrap) return decompose_cx_iontrap(a, b);
      break;
    case GateKind::CRY:
      return iontrap ? decompose_cry_iontrap(g.params[0], a, b)
                     : decompose_cry_superconducting(g.params[0], a, b);
    case GateKind::CP:
      return decompose_cp(g.params[0], a, b);
    case GateKind::SWAP:
      return decompose_swap(a, b);
    case GateKind::RXX:
      if (!iontrap) return decompose_rxx_cx(g.params[0], a, b);
      break;
    default:
      break;
  }
  throw StructuralError("no lowering for " + std::string(gate_name(g.kind)) + " to " +
                        target.name);
}

void lower_into(const GateInstance& gate, const NativeGateSet& target,
                std::vector<GateInstance>& out, int depth) {
  if (depth > 8) throw StructuralError("lowering did not terminate");
  if (gate.kind == GateKind::MEASURE || target.contains(gate.kind)) {
    out.push_back(gate);
    return;
  }
  if (is_two_qubit(gate.kind)) {
    lower_all(expand_two_qubit(gate, target), target, out, depth);
    return;
  }
  for (auto& g : rewrite_single_qubit(gate, target)) out.push_back(std::move(g));
}

}  // namespace

bool NativeGateSet::contains(GateKind kind) const {
  return kind == two_qubit_kind ||
         std::find(single_qubit_kinds.begin(), single_qubit_kinds.end(), kind) !=
             single_qubit_kinds.end();
}

NativeGateSet superconducting_gate_set() {
  return NativeGateSet{"superconducting", {GateKind::RZ, GateKind::SX, GateKind::X},
                       GateKind::CX};
}

NativeGateSet iontrap_gate_set() {
  return NativeGateSet{"iontrap", {GateKind::RX, GateKind::RY, GateKind::RZ},
                       GateKind::RXX};
}

NativeGateSet native_gate_set(std::string_view name) {
  if (name == "superconducting") return superconducting_gate_set();
  if (name == "iontrap") return iontrap_gate_set();
  throw LookupError("unknown native gate set '" + std::string(name) + "'");
}

std::vector<GateInstance> decompose_cry_superconducting(double theta, Qubit control,
                                                        Qubit target) {
  return {one(GateKind::U, target, {theta / 2, 0.0, 0.0}),
          two(GateKind::CX, control, target),
          one(GateKind::U, target, {-theta / 2, 0.0, 0.0}),
          two(GateKind::CX, control, target)};
}

std::vector<GateInstance> decompose_cry_iontrap(double theta, Qubit control, Qubit target) {
  // CRY(t) = RY_target(t/2) . exp(+i t/4 Z(x)Y), and (H (x) S) maps X(x)X to
  // Z(x)Y, so the target brackets carry the theta-dependent half rotation.
  return {one(GateKind::U, control, {pi / 2, 0.0, pi}),
          one(GateKind::U, target, {0.0, 0.0, -pi / 2}),
          two(GateKind::RXX, control, target, {-theta / 2}),
          one(GateKind::U, control, {pi / 2, 0.0, pi}),
          one(GateKind::U, target, {theta / 2, 0.0, pi / 2})};
}

std::vector<GateInstance> decompose_cx_iontrap(Qubit control, Qubit target) {
  return {one(GateKind::U, control, {pi / 2, 0.0, 0.0}),
          two(GateKind::RXX, control, target, {pi / 2}),
          one(GateKind::U, control, {pi / 2, pi / 2, -pi}),
          one(GateKind::U, target, {-pi / 2, -pi / 2, pi / 2})};
}

std::vector<GateInstance> decompose_cp(double lambda, Qubit control, Qubit target) {
  return {one(GateKind::RZ, control, {lambda / 2}),
          two(GateKind::CX, control, target),
          one(GateKind::RZ, target, {-lambda / 2}),
          two(GateKind::CX, control, target),
          one(GateKind::RZ, target, {lambda / 2})};
}

std::vector<GateInstance> decompose_swap(Qubit a, Qubit b) {
  return {two(GateKind::CX, a, b), two(GateKind::CX, b, a), two(GateKind::CX, a, b)};
}

std::vector<GateInstance> decompose_rxx_cx(double theta, Qubit a, Qubit b) {
  return {one(GateKind::H, a),          one(GateKind::H, b),
          two(GateKind::CX, a, b),      one(GateKind::RZ, b, {theta}),
          two(GateKind::CX, a, b),      one(GateKind::H, a),
          one(GateKind::H, b)};
}

ZyzAngles zyz_angles(const GateInstance& gate) {
  if (gate_arity(gate.kind) != 1 || gate.kind == GateKind::MEASURE) {
    throw StructuralError("zyz_angles needs a single-qubit unitary");
  }
  const ComplexMatrix m = local_matrix(gate);
  const std::complex<double> det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const ComplexMatrix v = m / std::sqrt(det);
  // v = [[e^{-i(phi+lambda)/2} c, .], [e^{i(phi-lambda)/2} s, e^{i(phi+lambda)/2} c]]
  const double c = std::abs(v(1, 1));
  const double s = std::abs(v(1, 0));
  ZyzAngles out;
  out.theta = 2.0 * std::atan2(s, c);
  const double sum = c > 1e-12 ? 2.0 * std::arg(v(1, 1)) : 0.0;
  const double diff = s > 1e-12 ? 2.0 * std::arg(v(1, 0)) : 0.0;
  out.phi = (sum + diff) / 2.0;
  out.lambda = (sum - diff) / 2.0;
  return out;
}

std::vector<GateInstance> rewrite_single_qubit(const GateInstance& gate,
                                               const NativeGateSet& target) {
  if (target.contains(gate.kind)) return {gate};
  const Qubit q = gate.qubits[0];
  const ZyzAngles a = zyz_angles(gate);
  std::vector<GateInstance> out;
  const auto rz = [&](double angle) {
    if (!negligible(angle)) out.push_back(one(GateKind::RZ, q, {wrap(angle)}));
  };

  if (target.contains(GateKind::RY)) {
    rz(a.lambda);
    if (!negligible(a.theta)) out.push_back(one(GateKind::RY, q, {a.theta}));
    rz(a.phi);
    return out;
  }
  if (target.contains(GateKind::SX)) {
    if (negligible(a.theta)) {
      rz(a.phi + a.lambda);
      return out;
    }
    // RZ(phi) RY(theta) RZ(lambda) ~ RZ(phi + pi) SX RZ(theta + pi) SX RZ(lambda)
    rz(a.lambda);
    out.push_back(one(GateKind::SX, q));
    rz(a.theta + pi);
    out.push_back(one(GateKind::SX, q));
    rz(a.phi + pi);
    return out;
  }
  throw StructuralError("target " + target.name + " has no single-qubit rewrite");
}

Circuit transpile(const Circuit& circuit, const NativeGateSet& target) {
  Circuit out(circuit.width(), circuit.classical_width());
  std::vector<GateInstance> lowered;
  for (const auto& g : circuit.gates()) {
    lowered.clear();
    lower_into(g, target, lowered, 0);
    for (auto& l : lowered) out.append(std::move(l));
  }
  return out;
}

}  // namespace qae
