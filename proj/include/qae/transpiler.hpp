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

#include <string>
#include <string_view>
#include <vector>

#include "qae/circuit.hpp"

namespace qae {

/// Gate vocabulary a device executes directly.
struct NativeGateSet {
  std::string name;
  std::vector<GateKind> single_qubit_kinds;
  GateKind two_qubit_kind = GateKind::CX;

  bool contains(GateKind kind) const;
};

/// {CX, I, RZ, SX, X}. Identity is never emitted, so it has no GateKind.
NativeGateSet superconducting_gate_set();

/// {RX, RY, RZ, RXX}.
NativeGateSet iontrap_gate_set();

/// "superconducting" or "iontrap"; LookupError otherwise.
NativeGateSet native_gate_set(std::string_view name);

/// CRY(theta) as U(theta/2,0,0) . CX . U(-theta/2,0,0) . CX on the target.
std::vector<GateInstance> decompose_cry_superconducting(double theta, Qubit control,
                                                        Qubit target);

/// CRY(theta) with a single RXX(-theta/2) between single-qubit brackets:
/// U(pi/2,0,pi) on the control on both sides, U(0,0,-pi/2) before and
/// U(theta/2,0,pi/2) after on the target.
std::vector<GateInstance> decompose_cry_iontrap(double theta, Qubit control, Qubit target);

/// CX from one RXX(pi/2): U(pi/2,0,0) on the control, RXX, then
/// U(pi/2,pi/2,-pi) on the control and U(-pi/2,-pi/2,pi/2) on the target.
std::vector<GateInstance> decompose_cx_iontrap(Qubit control, Qubit target);

/// CP(lambda) as RZ(lambda/2) on the control and CX . RZ(-lambda/2) . CX .
/// RZ(lambda/2) on the target.
std::vector<GateInstance> decompose_cp(double lambda, Qubit control, Qubit target);

/// Three alternating CX.
std::vector<GateInstance> decompose_swap(Qubit a, Qubit b);

/// RXX(theta) as H(x)H . CX . RZ(theta) on b . CX . H(x)H.
std::vector<GateInstance> decompose_rxx_cx(double theta, Qubit a, Qubit b);

/// Euler angles (theta, phi, lambda) with m = e^{i alpha} RZ(phi) RY(theta) RZ(lambda).
struct ZyzAngles {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
};

/// Angles of a single-qubit gate's matrix.
ZyzAngles zyz_angles(const GateInstance& gate);

/// Rewrites one single-qubit gate into the target's single-qubit kinds, up to
/// global phase. Native gates are returned unchanged.
std::vector<GateInstance> rewrite_single_qubit(const GateInstance& gate,
                                               const NativeGateSet& target);

/// Lowers every gate to the target set. Width, classical register and
/// measurements are preserved; the result is equal to the input up to global
/// phase. No cancellation or merging is performed.
Circuit transpile(const Circuit& circuit, const NativeGateSet& target);

}  // namespace qae
