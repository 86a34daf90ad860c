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
#include <optional>
#include <vector>

#include "qae/circuit.hpp"
#include "qae/coupling_map.hpp"
#include "qae/transpiler.hpp"

namespace qae {

/// Injective logical -> physical assignment.
class Layout {
 public:
  Layout() = default;
  explicit Layout(std::vector<Qubit> logical_to_physical)
      : map_(std::move(logical_to_physical)) {}

  std::size_t size() const noexcept { return map_.size(); }
  Qubit physical(Qubit logical) const { return map_.at(logical); }
  const std::vector<Qubit>& mapping() const noexcept { return map_; }

  /// Throws StructuralError unless injective with image below qubit_count.
  void validate(std::size_t qubit_count) const;

  bool operator==(const Layout&) const = default;

 private:
  std::vector<Qubit> map_;
};

struct RouteOptions {
  std::size_t lookahead = 8;  ///< upcoming two-qubit gates scored per SWAP
  double decay = 0.7;         ///< weight of the i-th lookahead gate is decay^i
};

/// Routing result for the best trial. `circuit` acts on physical qubits
/// (width = device qubit count) with SWAPs inserted and is not yet lowered;
/// measurements follow their logical qubit, so the classical register keeps
/// its logical meaning.
struct RoutedCircuit {
  Circuit circuit;
  Layout initial_layout;
  Layout final_layout;
  std::size_t swap_count = 0;
  std::uint64_t seed = 0;
  std::size_t best_trial = 0;
  std::vector<std::size_t> trial_swap_counts;
};

/// Stochastic lookahead router, best of `trials`. Each trial draws its own
/// stream from (seed, trial index) and a random compact initial layout with
/// the busiest logical qubit on a maximum-degree physical qubit, then walks
/// the gates in program order. A non-adjacent two-qubit gate gets SWAPs along
/// shortest paths, each chosen by the decayed distance sum of the next
/// `lookahead` two-qubit gates. Deterministic for fixed (seed, trials).
RoutedCircuit route(const Circuit& circuit, const CouplingMap& device, std::uint64_t seed,
                    std::size_t trials, const RouteOptions& options = {});

/// One trial of route(); exposed for testing.
RoutedCircuit route_trial(const Circuit& circuit, const CouplingMap& device,
                          std::uint64_t trial_seed, const RouteOptions& options = {});

/// Two-qubit count after lowering the routed circuit to `target`.
std::size_t routed_two_qubit_count(const RoutedCircuit& routed, const NativeGateSet& target);

/// True if every two-qubit gate acts on a device edge.
bool respects_coupling(const Circuit& physical, const CouplingMap& device);

inline constexpr std::size_t kBruteForceMaxQubits = 6;
inline constexpr std::size_t kBruteForceMaxGates = 12;

/// Exact minimum SWAP count over all initial layouts (or the given one) and
/// SWAP insertions, gates kept in program order. Exhaustive 0-1 BFS over
/// (layout, gate index) states. CapabilityError above the size caps.
std::size_t brute_force_route(const Circuit& circuit, const CouplingMap& device,
                              const std::optional<Layout>& fixed_layout = std::nullopt);

}  // namespace qae
