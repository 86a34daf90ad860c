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

#include "qae/statevector.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "qae/error.hpp"
#include "qae/rng.hpp"

namespace qae {
namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

// Insert a zero bit at position `bit`.
inline std::size_t insert_zero(std::size_t i, std::size_t bit) {
  const std::size_t low = i & ((std::size_t{1} << bit) - 1);
  return ((i >> bit) << (bit + 1)) | low;
}

using Matrix2 = std::array<cplx, 4>;  // row-major

Matrix2 single_qubit_matrix(const GateInstance& g) {
  const auto& p = g.params;
  switch (g.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      return {r, r, r, -r};
    }
    case GateKind::X:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::SX:
      return {cplx(0.5, 0.5), cplx(0.5, -0.5), cplx(0.5, -0.5), cplx(0.5, 0.5)};
    case GateKind::RZ:
      return {std::exp(-kI * (p[0] / 2)), 0.0, 0.0, std::exp(kI * (p[0] / 2))};
    case GateKind::RX: {
      const double c = std::cos(p[0] / 2);
      const double s = std::sin(p[0] / 2);
      return {c, -kI * s, -kI * s, c};
    }
    case GateKind::RY: {
      const double c = std::cos(p[0] / 2);
      const double s = std::sin(p[0] / 2);
      return {c, -s, s, c};
    }
    case GateKind::U: {
      const double c = std::cos(p[0] / 2);
      const double s = std::sin(p[0] / 2);
      return {c, -std::exp(kI * p[2]) * s, std::exp(kI * p[1]) * s,
              std::exp(kI * (p[1] + p[2])) * c};
    }
    default:
      throw StructuralError("not a single-qubit unitary");
  }
}

class Kernels {
 public:
  explicit Kernels(std::vector<cplx>& amps) : a_(amps) {}

  void one(const Matrix2& m, std::size_t q) {
    const std::size_t half = a_.size() >> 1;
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < half; ++i) {
      const std::size_t i0 = insert_zero(i, q);
      const std::size_t i1 = i0 | bit;
      const cplx v0 = a_[i0];
      const cplx v1 = a_[i1];
      a_[i0] = m[0] * v0 + m[1] * v1;
      a_[i1] = m[2] * v0 + m[3] * v1;
    }
  }

  void diagonal(cplx d0, cplx d1, std::size_t q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] *= (i & bit) ? d1 : d0;
  }

  // Calls f(i00, i01, i10, i11) over every group, where bit 0 of the suffix
  // is qubit a and bit 1 is qubit b.
  template <typename F>
  void pairs(std::size_t a, std::size_t b, F&& f) {
    const std::size_t lo = std::min(a, b);
    const std::size_t hi = std::max(a, b);
    const std::size_t ba = std::size_t{1} << a;
    const std::size_t bb = std::size_t{1} << b;
    const std::size_t quarter = a_.size() >> 2;
    for (std::size_t i = 0; i < quarter; ++i) {
      const std::size_t base = insert_zero(insert_zero(i, lo), hi);
      f(base, base | ba, base | bb, base | ba | bb);
    }
  }

  void apply(const GateInstance& g) {
    const auto& q = g.qubits;
    switch (g.kind) {
      case GateKind::MEASURE:
        return;
      case GateKind::RZ:
        diagonal(std::exp(-kI * (g.params[0] / 2)), std::exp(kI * (g.params[0] / 2)), q[0]);
        return;
      case GateKind::X: {
        const std::size_t bit = std::size_t{1} << q[0];
        for (std::size_t i = 0; i < a_.size(); ++i) {
          if (!(i & bit)) std::swap(a_[i], a_[i | bit]);
        }
        return;
      }
      case GateKind::H:
      case GateKind::SX:
      case GateKind::RX:
      case GateKind::RY:
      case GateKind::U:
        one(single_qubit_matrix(g), q[0]);
        return;
      case GateKind::CX:
        pairs(q[0], q[1], [&](std::size_t, std::size_t i_c, std::size_t,
                              std::size_t i_ct) { std::swap(a_[i_c], a_[i_ct]); });
        return;
      case GateKind::CRY: {
        const double c = std::cos(g.params[0] / 2);
        const double s = std::sin(g.params[0] / 2);
        // Control is qubit a (suffix bit 0): act on target where it is set.
        pairs(q[0], q[1], [&](std::size_t, std::size_t i_c, std::size_t,
                              std::size_t i_ct) {
          const cplx v0 = a_[i_c];
          const cplx v1 = a_[i_ct];
          a_[i_c] = c * v0 - s * v1;
          a_[i_ct] = s * v0 + c * v1;
        });
        return;
      }
      case GateKind::CP: {
        const cplx ph = std::exp(kI * g.params[0]);
        pairs(q[0], q[1], [&](std::size_t, std::size_t, std::size_t,
                              std::size_t i11) { a_[i11] *= ph; });
        return;
      }
      case GateKind::RXX: {
        const double c = std::cos(g.params[0] / 2);
        const cplx s = -kI * std::sin(g.params[0] / 2);
        pairs(q[0], q[1], [&](std::size_t i00, std::size_t i01, std::size_t i10,
                              std::size_t i11) {
          const cplx v00 = a_[i00], v01 = a_[i01], v10 = a_[i10], v11 = a_[i11];
          a_[i00] = c * v00 + s * v11;
          a_[i11] = c * v11 + s * v00;
          a_[i01] = c * v01 + s * v10;
          a_[i10] = c * v10 + s * v01;
        });
        return;
      }
      case GateKind::SWAP:
        pairs(q[0], q[1], [&](std::size_t, std::size_t i01, std::size_t i10,
                              std::size_t) { std::swap(a_[i01], a_[i10]); });
        return;
    }
    throw StructuralError("unknown gate kind");
  }

 private:
  std::vector<cplx>& a_;
};

std::string fmt(const char* spec, double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), spec, v);
  return std::string(buf.data());
}

EstimateDistribution fold(const std::vector<double>& probs, std::size_t n) {
  EstimateDistribution dist;
  dist.eval_qubits = n;
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  dist.entries.resize(half + 1);
  for (std::uint64_t k = 0; k <= half; ++k) {
    dist.entries[k].grid_index = k;
    dist.entries[k].estimate = outcome_to_estimate(k, n);
  }
  for (std::uint64_t z = 0; z < probs.size(); ++z) {
    dist.entries[fold_outcome(z, n)].mass += probs[z];
  }
  return dist;
}

}  // namespace

StateVector::StateVector(std::size_t width) : width_(width) {
  if (width > kMaxSimulationWidth) {
    throw CapabilityError("state vector of " + std::to_string(width) +
                          " qubits exceeds cap of " +
                          std::to_string(kMaxSimulationWidth));
  }
  amps_.assign(std::size_t{1} << width, cplx{0.0, 0.0});
  amps_[0] = 1.0;
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

void StateVector::apply(const GateInstance& gate) {
  validate_gate(gate, width_, std::numeric_limits<std::size_t>::max());
  Kernels(amps_).apply(gate);
}

StateVector run_statevector(const Circuit& circuit, const GateObserver& observer) {
  StateVector state(circuit.width());
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].kind == GateKind::MEASURE) continue;
    state.apply(gates[i]);
    if (observer) observer(i, state);
  }
  return state;
}

std::vector<double> measured_probabilities(const Circuit& circuit) {
  if (circuit.classical_width() > 30) {
    throw CapabilityError("classical register too wide to enumerate");
  }
  // Last measurement into a bit wins.
  std::vector<std::optional<Qubit>> source(circuit.classical_width());
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::MEASURE) source[g.clbit] = g.qubits[0];
  }
  const StateVector state = run_statevector(circuit);
  std::vector<double> probs(std::size_t{1} << circuit.classical_width(), 0.0);
  const auto& amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    std::size_t value = 0;
    for (std::size_t b = 0; b < source.size(); ++b) {
      if (source[b] && ((i >> *source[b]) & 1U)) value |= std::size_t{1} << b;
    }
    probs[value] += p;
  }
  return probs;
}

double EstimateDistribution::mass_at(std::uint64_t grid_index) const {
  for (const auto& e : entries) {
    if (e.grid_index == grid_index) return e.mass;
  }
  return 0.0;
}

EstimateDistribution exact_distribution(const Circuit& circuit, std::size_t eval_qubits) {
  if (eval_qubits == 0 || circuit.classical_width() != eval_qubits) {
    throw StructuralError("classical register must hold exactly the " +
                          std::to_string(eval_qubits) + " evaluation bits");
  }
  return fold(measured_probabilities(circuit), eval_qubits);
}

EstimateDistribution exact_distribution(const Circuit& circuit, const QaeProblem& problem) {
  return exact_distribution(circuit, problem.eval_qubits);
}

EstimateDistribution sample_shots(const Circuit& circuit, std::uint64_t shots,
                                  std::uint64_t seed) {
  if (shots == 0) throw DomainError("shots must be at least 1");
  EstimateDistribution dist = exact_distribution(circuit, circuit.classical_width());
  std::vector<double> cumulative;
  cumulative.reserve(dist.entries.size());
  double acc = 0.0;
  for (const auto& e : dist.entries) cumulative.push_back(acc += e.mass);

  Rng rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    dist.entries[static_cast<std::size_t>(it - cumulative.begin())].count += 1;
  }
  for (auto& e : dist.entries) {
    e.mass = static_cast<double>(e.count) / static_cast<double>(shots);
  }
  dist.shots = shots;
  dist.seed = seed;
  return dist;
}

PricedEstimate estimate_and_price(const EstimateDistribution& dist, const bond::TBill& tb) {
  if (dist.entries.empty()) throw DomainError("empty distribution");
  const EstimateDistribution::Entry* best = nullptr;
  for (const auto& e : dist.entries) {
    if (best == nullptr || e.mass > best->mass ||
        (e.mass == best->mass && e.estimate < best->estimate)) {
      best = &e;
    }
  }
  bond::TBill priced = tb;
  priced.p_no_change = best->estimate;
  return PricedEstimate{best->estimate, bond::expected_value(priced)};
}

std::string distribution_csv(const EstimateDistribution& dist) {
  std::ostringstream out;
  if (dist.shots) {
    out << "estimate,count,frequency\n";
    for (const auto& e : dist.entries) {
      out << fmt("%.6f", e.estimate) << ',' << e.count << ',' << fmt("%.6f", e.mass)
          << '\n';
    }
  } else {
    out << "estimate,mass\n";
    for (const auto& e : dist.entries) {
      out << fmt("%.6f", e.estimate) << ',' << fmt("%.12f", e.mass) << '\n';
    }
  }
  return out.str();
}

}  // namespace qae
