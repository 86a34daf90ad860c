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

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "qae/error.hpp"
#include "qae/rng.hpp"

namespace qae {
namespace {

constexpr int kEmpty = -1;

void check_capacity(const Circuit& circuit, const CouplingMap& device) {
  if (circuit.width() > device.qubit_count()) {
    throw CapabilityError("circuit of width " + std::to_string(circuit.width()) +
                          " does not fit device '" + device.name() + "' with " +
                          std::to_string(device.qubit_count()) + " qubits");
  }
}

std::vector<std::size_t> two_qubit_positions(const Circuit& circuit) {
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    if (is_two_qubit(circuit.gates()[i].kind)) pos.push_back(i);
  }
  return pos;
}

// Random compact placement. The busiest logical qubit goes on a random
// maximum-degree physical qubit; the rest follow in random order, each on a
// free physical qubit minimizing its weighted distance to already placed
// partners (ties broken at random).
std::vector<Qubit> initial_layout(const Circuit& circuit, const CouplingMap& device, Rng& rng) {
  const std::size_t w = circuit.width();
  const std::size_t n_phys = device.qubit_count();
  std::vector<std::size_t> weight(w * w, 0);
  std::vector<std::size_t> busy(w, 0);
  for (const auto& g : circuit.gates()) {
    if (!is_two_qubit(g.kind)) continue;
    const Qubit a = g.qubits[0];
    const Qubit b = g.qubits[1];
    ++weight[a * w + b];
    ++weight[b * w + a];
    ++busy[a];
    ++busy[b];
  }
  std::vector<Qubit> layout(w, 0);
  std::vector<bool> placed(w, false);
  std::vector<bool> taken(n_phys, false);
  if (w == 0) return layout;

  const std::size_t busiest = *std::max_element(busy.begin(), busy.end());
  std::vector<Qubit> busiest_logical;
  for (Qubit l = 0; l < w; ++l) {
    if (busy[l] == busiest) busiest_logical.push_back(l);
  }
  const Qubit hub = busiest_logical[rng.below(busiest_logical.size())];
  std::vector<Qubit> hubs;
  for (Qubit p = 0; p < n_phys; ++p) {
    if (device.degree(p) == device.max_degree()) hubs.push_back(p);
  }
  layout[hub] = hubs[rng.below(hubs.size())];
  placed[hub] = true;
  taken[layout[hub]] = true;

  std::vector<Qubit> order;
  for (Qubit l = 0; l < w; ++l) {
    if (l != hub) order.push_back(l);
  }
  rng.shuffle(std::span<Qubit>(order));

  std::vector<Qubit> best;
  for (Qubit l : order) {
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    best.clear();
    for (Qubit p = 0; p < n_phys; ++p) {
      if (taken[p]) continue;
      std::size_t cost = 0;
      bool any_partner = false;
      for (Qubit m = 0; m < w; ++m) {
        if (!placed[m] || weight[l * w + m] == 0) continue;
        cost += weight[l * w + m] * device.distance(p, layout[m]);
        any_partner = true;
      }
      if (!any_partner) cost = device.distance(p, layout[hub]);
      if (cost < best_cost) {
        best_cost = cost;
        best.clear();
      }
      if (cost == best_cost) best.push_back(p);
    }
    layout[l] = best[rng.below(best.size())];
    placed[l] = true;
    taken[layout[l]] = true;
  }
  return layout;
}

}  // namespace

void Layout::validate(std::size_t qubit_count) const {
  std::vector<bool> seen(qubit_count, false);
  for (Qubit p : map_) {
    if (p >= qubit_count) throw StructuralError("layout image out of range");
    if (seen[p]) throw StructuralError("layout is not injective");
    seen[p] = true;
  }
}

RoutedCircuit route_trial(const Circuit& circuit, const CouplingMap& device,
                          std::uint64_t trial_seed, const RouteOptions& options) {
  check_capacity(circuit, device);
  Rng rng(trial_seed);
  std::vector<Qubit> l2p = initial_layout(circuit, device, rng);
  std::vector<int> p2l(device.qubit_count(), kEmpty);
  for (Qubit l = 0; l < l2p.size(); ++l) p2l[l2p[l]] = static_cast<int>(l);

  RoutedCircuit result;
  result.initial_layout = Layout(l2p);
  result.seed = trial_seed;
  Circuit out(device.qubit_count(), circuit.classical_width());

  const auto& gates = circuit.gates();
  const std::vector<std::size_t> upcoming = two_qubit_positions(circuit);
  std::size_t next_two = 0;  // index into `upcoming` of the current gate

  const auto apply_swap = [&](Qubit pa, Qubit pb) {
    const int la = p2l[pa];
    const int lb = p2l[pb];
    std::swap(p2l[pa], p2l[pb]);
    if (la != kEmpty) l2p[static_cast<std::size_t>(la)] = pb;
    if (lb != kEmpty) l2p[static_cast<std::size_t>(lb)] = pa;
  };

  const auto lookahead_cost = [&](std::size_t from) {
    double cost = 0.0;
    double w = 1.0;
    const std::size_t end = std::min(upcoming.size(), from + options.lookahead);
    for (std::size_t i = from; i < end; ++i, w *= options.decay) {
      const auto& g = gates[upcoming[i]];
      cost += w * static_cast<double>(device.distance(l2p[g.qubits[0]], l2p[g.qubits[1]]));
    }
    return cost;
  };

  std::vector<std::pair<Qubit, Qubit>> candidates;
  std::vector<std::pair<Qubit, Qubit>> tied;
  for (const auto& g : gates) {
    if (is_two_qubit(g.kind)) {
      for (;;) {
        const Qubit pa = l2p[g.qubits[0]];
        const Qubit pb = l2p[g.qubits[1]];
        const std::size_t d = device.distance(pa, pb);
        if (d <= 1) break;
        candidates.clear();
        for (Qubit x : device.neighbors(pa)) {
          if (device.distance(x, pb) < d) candidates.emplace_back(pa, x);
        }
        for (Qubit y : device.neighbors(pb)) {
          if (device.distance(y, pa) < d) candidates.emplace_back(pb, y);
        }
        double best = std::numeric_limits<double>::infinity();
        tied.clear();
        for (const auto& [u, v] : candidates) {
          apply_swap(u, v);
          const double cost = lookahead_cost(next_two + 1);
          apply_swap(u, v);
          if (cost < best - 1e-12) {
            best = cost;
            tied.clear();
          }
          if (std::abs(cost - best) <= 1e-12) tied.emplace_back(u, v);
        }
        const auto [u, v] = tied[rng.below(tied.size())];
        apply_swap(u, v);
        out.swap(u, v);
        ++result.swap_count;
      }
      ++next_two;
    }
    GateInstance mapped = g;
    for (auto& q : mapped.qubits) q = l2p[q];
    out.append(std::move(mapped));
  }
  result.circuit = std::move(out);
  result.final_layout = Layout(l2p);
  result.trial_swap_counts = {result.swap_count};
  return result;
}

RoutedCircuit route(const Circuit& circuit, const CouplingMap& device, std::uint64_t seed,
                    std::size_t trials, const RouteOptions& options) {
  check_capacity(circuit, device);
  if (trials == 0) throw DomainError("route needs at least one trial");
  std::optional<RoutedCircuit> best;
  std::vector<std::size_t> counts;
  counts.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    RoutedCircuit r = route_trial(circuit, device, derive_seed(seed, t), options);
    counts.push_back(r.swap_count);
    if (!best || r.swap_count < best->swap_count) {
      r.best_trial = t;
      best = std::move(r);
    }
  }
  best->seed = seed;
  best->trial_swap_counts = std::move(counts);
  return std::move(*best);
}

std::size_t routed_two_qubit_count(const RoutedCircuit& routed, const NativeGateSet& target) {
  return count_two_qubit_gates(transpile(routed.circuit, target));
}

bool respects_coupling(const Circuit& physical, const CouplingMap& device) {
  if (physical.width() > device.qubit_count()) return false;
  return std::all_of(physical.gates().begin(), physical.gates().end(),
                     [&](const GateInstance& g) {
                       return !is_two_qubit(g.kind) ||
                              device.adjacent(g.qubits[0], g.qubits[1]);
                     });
}

std::size_t brute_force_route(const Circuit& circuit, const CouplingMap& device,
                              const std::optional<Layout>& fixed_layout) {
  check_capacity(circuit, device);
  const std::vector<std::size_t> positions = two_qubit_positions(circuit);
  if (device.qubit_count() > kBruteForceMaxQubits || positions.size() > kBruteForceMaxGates) {
    throw CapabilityError("brute_force_route is limited to " +
                          std::to_string(kBruteForceMaxQubits) + " device qubits and " +
                          std::to_string(kBruteForceMaxGates) + " two-qubit gates");
  }
  const std::size_t w = circuit.width();
  const std::size_t n_gates = positions.size();
  // A layout is w 3-bit physical indices packed into one integer.
  const std::size_t layout_codes = std::size_t{1} << (3 * w);
  const auto encode = [&](const std::vector<Qubit>& l2p) {
    std::size_t code = 0;
    for (std::size_t l = 0; l < w; ++l) code |= std::size_t{l2p[l]} << (3 * l);
    return code;
  };
  const auto decode = [&](std::size_t code) {
    std::vector<Qubit> l2p(w);
    for (std::size_t l = 0; l < w; ++l) l2p[l] = static_cast<Qubit>((code >> (3 * l)) & 7U);
    return l2p;
  };
  const auto state_of = [&](std::size_t code, std::size_t gate) {
    return gate * layout_codes + code;
  };

  constexpr std::uint8_t kUnseen = std::numeric_limits<std::uint8_t>::max();
  std::vector<std::uint8_t> dist((n_gates + 1) * layout_codes, kUnseen);
  std::deque<std::size_t> frontier;

  if (fixed_layout) {
    if (fixed_layout->size() != w) throw StructuralError("fixed layout has wrong size");
    fixed_layout->validate(device.qubit_count());
    const std::size_t s = state_of(encode(fixed_layout->mapping()), 0);
    dist[s] = 0;
    frontier.push_back(s);
  } else {
    std::vector<Qubit> phys(device.qubit_count());
    std::iota(phys.begin(), phys.end(), Qubit{0});
    // Enumerate every injective placement via permutations of the device
    // qubits; the first w entries form the layout.
    std::sort(phys.begin(), phys.end());
    do {
      const std::vector<Qubit> l2p(phys.begin(), phys.begin() + static_cast<long>(w));
      const std::size_t s = state_of(encode(l2p), 0);
      if (dist[s] == kUnseen) {
        dist[s] = 0;
        frontier.push_back(s);
      }
    } while (std::next_permutation(phys.begin(), phys.end()));
  }

  while (!frontier.empty()) {
    const std::size_t s = frontier.front();
    frontier.pop_front();
    const std::size_t gate = s / layout_codes;
    const std::size_t code = s % layout_codes;
    const std::uint8_t d = dist[s];
    if (gate == n_gates) return d;
    const std::vector<Qubit> l2p = decode(code);

    const auto& g = circuit.gates()[positions[gate]];
    if (device.adjacent(l2p[g.qubits[0]], l2p[g.qubits[1]])) {
      const std::size_t next = state_of(code, gate + 1);
      if (dist[next] == kUnseen || dist[next] > d) {
        dist[next] = d;
        frontier.push_front(next);
      }
    }
    for (const auto& [u, v] : device.edges()) {
      std::vector<Qubit> swapped = l2p;
      bool moved = false;
      for (auto& p : swapped) {
        if (p == u) {
          p = v;
          moved = true;
        } else if (p == v) {
          p = u;
          moved = true;
        }
      }
      if (!moved) continue;
      const std::size_t next = state_of(encode(swapped), gate);
      if (dist[next] == kUnseen || dist[next] > d + 1) {
        dist[next] = static_cast<std::uint8_t>(d + 1);
        frontier.push_back(next);
      }
    }
  }
  throw StructuralError("brute_force_route: no routing found");
}

}  // namespace qae
