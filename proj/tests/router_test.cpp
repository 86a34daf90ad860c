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

#include "qae/router.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qae/amplitude_estimation.hpp"
#include "qae/error.hpp"
#include "qae/rng.hpp"
#include "qae/transpiler.hpp"

using namespace qae;
namespace o = qae::oracle;

namespace {

// Checks gate by gate that every two-qubit gate sits on a device edge and that
// replaying the routed SWAPs from the initial layout ends in the final layout.
void expect_valid_routing(const Circuit& logical, const RoutedCircuit& r,
                          const CouplingMap& device) {
  ASSERT_EQ(r.circuit.width(), device.qubit_count());
  r.initial_layout.validate(device.qubit_count());
  r.final_layout.validate(device.qubit_count());
  EXPECT_TRUE(respects_coupling(r.circuit, device));
  std::vector<Qubit> l2p = r.initial_layout.mapping();
  std::size_t next = 0;
  std::size_t swaps = 0;
  for (const auto& g : r.circuit.gates()) {
    // A routed SWAP is inserted unless it is the pending logical SWAP itself;
    // inserted SWAPs only appear while that pair is not adjacent.
    const bool pending_logical_swap =
        next < logical.size() && logical.gates()[next].kind == GateKind::SWAP &&
        l2p[logical.gates()[next].qubits[0]] == g.qubits[0] &&
        l2p[logical.gates()[next].qubits[1]] == g.qubits[1];
    if (g.kind == GateKind::SWAP && !pending_logical_swap) {
      ++swaps;
      for (auto& p : l2p) {
        if (p == g.qubits[0]) {
          p = g.qubits[1];
        } else if (p == g.qubits[1]) {
          p = g.qubits[0];
        }
      }
      continue;
    }
    ASSERT_LT(next, logical.size());
    const auto& lg = logical.gates()[next++];
    ASSERT_EQ(lg.kind, g.kind);
    ASSERT_EQ(lg.params, g.params);
    for (std::size_t i = 0; i < lg.qubits.size(); ++i) EXPECT_EQ(l2p[lg.qubits[i]], g.qubits[i]);
  }
  EXPECT_EQ(next, logical.size());
  EXPECT_EQ(swaps, r.swap_count);
  EXPECT_EQ(l2p, r.final_layout.mapping());
}

// Columns of the logical unitary, embedded into the device register with
// unused physical qubits in |0>, under the given layout.
o::Mat embed(const o::Mat& logical_states, const std::vector<Qubit>& l2p, std::size_t n_phys) {
  const Eigen::Index dim = Eigen::Index{1} << n_phys;
  o::Mat out = o::Mat::Zero(dim, logical_states.cols());
  for (Eigen::Index x = 0; x < logical_states.rows(); ++x) {
    std::size_t phys = 0;
    for (std::size_t l = 0; l < l2p.size(); ++l) {
      if ((static_cast<std::size_t>(x) >> l) & 1U) phys |= std::size_t{1} << l2p[l];
    }
    out.row(static_cast<Eigen::Index>(phys)) = logical_states.row(x);
  }
  return out;
}

Circuit random_circuit(std::mt19937_64& gen, std::size_t width, std::size_t two_qubit_gates) {
  Circuit c(width);
  while (count_two_qubit_gates(c) < two_qubit_gates) c.append(o::random_gate(gen, width));
  return c;
}

}  // namespace

TEST(router, all_to_all_needs_no_swaps) {
  std::mt19937_64 gen(51);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = random_circuit(gen, 5, 10);
    const RoutedCircuit r = route(c, all_to_all(5), 7, 4);
    EXPECT_EQ(r.swap_count, 0u);
    expect_valid_routing(c, r, all_to_all(5));
  }
}

TEST(router, yorktown_qae_three) {
  const CouplingMap y = builtin_coupling_map("yorktown");
  const Circuit c = build_qae(make_problem(0.2, 3));
  const RoutedCircuit r = route(c, y, 1234, 64);
  EXPECT_EQ(r.swap_count, 1u);
  EXPECT_EQ(routed_two_qubit_count(r, superconducting_gate_set()), 15u);
  EXPECT_EQ(brute_force_route(c.without_measurements(), y), 1u);
  expect_valid_routing(c, r, y);
  EXPECT_EQ(r.trial_swap_counts.size(), 64u);
  EXPECT_EQ(r.trial_swap_counts[r.best_trial], r.swap_count);
}

TEST(router, tokyo_qae) {
  const CouplingMap t = builtin_coupling_map("tokyo");
  const Circuit c3 = build_qae(make_problem(0.2, 3));
  const RoutedCircuit r3 = route(c3, t, 1234, 64);
  EXPECT_EQ(r3.swap_count, 0u);
  EXPECT_EQ(routed_two_qubit_count(r3, superconducting_gate_set()), 12u);
  expect_valid_routing(c3, r3, t);

  const Circuit c4 = build_qae(make_problem(0.2, 4));
  const RoutedCircuit r4 = route(c4, t, 1234, 64);
  EXPECT_EQ(r4.swap_count, 1u);
  EXPECT_EQ(routed_two_qubit_count(r4, superconducting_gate_set()), 23u);
  expect_valid_routing(c4, r4, t);
}

TEST(router, ion_trap_count_ignores_routing) {
  const Circuit c = build_qae(make_problem(0.2, 3));
  const RoutedCircuit r = route(c, all_to_all(4), 1, 1);
  EXPECT_EQ(routed_two_qubit_count(r, iontrap_gate_set()), 9u);
  EXPECT_EQ(routed_two_qubit_count(r, superconducting_gate_set()), 12u);
}

TEST(router, brute_force_small_cases) {
  const CouplingMap path("path3", 3, {{0, 1}, {1, 2}});
  Circuit c(3);
  c.cx(0, 1).cx(0, 2);
  EXPECT_EQ(brute_force_route(c, path, Layout({1, 0, 2})), 0u);
  EXPECT_EQ(brute_force_route(c, path, Layout({0, 1, 2})), 1u);
  EXPECT_EQ(brute_force_route(c, path), 0u);
  EXPECT_EQ(brute_force_route(c, all_to_all(3)), 0u);
  EXPECT_THROW(brute_force_route(c, builtin_coupling_map("tokyo")), CapabilityError);
  EXPECT_THROW(brute_force_route(c, path, Layout({0, 0, 1})), StructuralError);
}

TEST(router, heuristic_is_near_optimal) {
  std::mt19937_64 gen(52);
  const std::vector<CouplingMap> devices = {
      builtin_coupling_map("yorktown"),
      CouplingMap("line5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),
      CouplingMap("ring6", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}),
      CouplingMap("star5", 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}),
  };
  for (const auto& device : devices) {
    for (int trial = 0; trial < 6; ++trial) {
      const std::size_t width = 3 + static_cast<std::size_t>(gen() % (device.qubit_count() - 2));
      const Circuit c = random_circuit(gen, std::min<std::size_t>(width, 5), 8);
      const std::size_t optimum = brute_force_route(c, device);
      const RoutedCircuit r = route(c, device, gen(), 64);
      EXPECT_LE(r.swap_count, optimum + 1) << device.name();
      EXPECT_GE(r.swap_count, optimum) << device.name();
      expect_valid_routing(c, r, device);
    }
  }
}

TEST(router, routing_preserves_semantics) {
  std::mt19937_64 gen(53);
  const CouplingMap y = builtin_coupling_map("yorktown");
  const CouplingMap line("line5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  for (const auto* device : {&y, &line}) {
    for (int trial = 0; trial < 8; ++trial) {
      const std::size_t width = 2 + static_cast<std::size_t>(gen() % 4);
      const Circuit c = random_circuit(gen, width, 6);
      const RoutedCircuit r = route(c, *device, gen(), 8);
      const o::Mat logical = o::circuit_matrix(c);
      const o::Mat lhs = o::circuit_matrix(r.circuit) *
                         embed(o::Mat::Identity(logical.rows(), logical.cols()),
                               r.initial_layout.mapping(), device->qubit_count());
      const o::Mat rhs = embed(logical, r.final_layout.mapping(), device->qubit_count());
      EXPECT_TRUE(o::same_up_to_phase(lhs, rhs, 1e-10)) << device->name() << " width " << width;
    }
  }
}

TEST(router, deterministic_per_seed) {
  const Circuit c = build_qae(make_problem(0.2, 6));
  const CouplingMap cairo = builtin_coupling_map("cairo");
  const RoutedCircuit a = route(c, cairo, 99, 8);
  const RoutedCircuit b = route(c, cairo, 99, 8);
  EXPECT_EQ(a.circuit, b.circuit);
  EXPECT_EQ(a.trial_swap_counts, b.trial_swap_counts);
  EXPECT_EQ(a.initial_layout, b.initial_layout);
  const RoutedCircuit t = route_trial(c, cairo, derive_seed(99, a.best_trial));
  EXPECT_EQ(t.circuit, a.circuit);
  expect_valid_routing(c, a, cairo);
}

TEST(router, measurements_follow_layout) {
  const Circuit c = build_qae(make_problem(0.2, 4));
  const CouplingMap cairo = builtin_coupling_map("cairo");
  const RoutedCircuit r = route(c, cairo, 5, 4);
  for (const auto& g : r.circuit.gates()) {
    if (g.kind == GateKind::MEASURE) EXPECT_EQ(g.qubits[0], r.final_layout.physical(g.clbit));
  }
}

TEST(router, rejects_oversized_circuits) {
  const Circuit c = build_qae(make_problem(0.2, 5));
  EXPECT_THROW(route(c, builtin_coupling_map("yorktown"), 1, 4), CapabilityError);
  EXPECT_THROW(route(c, builtin_coupling_map("cairo"), 1, 0), DomainError);
  EXPECT_THROW(Layout({0, 0}).validate(3), StructuralError);
  EXPECT_THROW(Layout({0, 5}).validate(3), StructuralError);
}
