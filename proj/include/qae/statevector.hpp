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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qae/amplitude_estimation.hpp"
#include "qae/bond.hpp"
#include "qae/circuit.hpp"

namespace qae {

inline constexpr std::size_t kMaxSimulationWidth = 24;

/// Dense amplitudes, little-endian: bit q of the index is qubit q.
class StateVector {
 public:
  /// |0...0> on `width` qubits.
  explicit StateVector(std::size_t width);

  std::size_t width() const noexcept { return width_; }
  const std::vector<std::complex<double>>& amplitudes() const noexcept { return amps_; }
  std::complex<double> operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;

  /// Applies one unitary gate in place. MEASURE is ignored.
  void apply(const GateInstance& gate);

 private:
  std::size_t width_;
  std::vector<std::complex<double>> amps_;
};

/// Called after every applied gate with the gate's index in the circuit.
using GateObserver = std::function<void(std::size_t, const StateVector&)>;

/// Final state from |0...0>. Measurements are skipped. CapabilityError above
/// kMaxSimulationWidth.
StateVector run_statevector(const Circuit& circuit, const GateObserver& observer = {});

/// Probability of each classical-register value, from the MEASURE mapping
/// (qubit -> bit) of the circuit and its final state.
std::vector<double> measured_probabilities(const Circuit& circuit);

/// Distribution over the folded estimate grid. `count` is only meaningful
/// for sampled distributions.
struct EstimateDistribution {
  struct Entry {
    std::uint64_t grid_index = 0;
    double estimate = 0.0;
    double mass = 0.0;
    std::uint64_t count = 0;
  };

  std::size_t eval_qubits = 0;
  std::vector<Entry> entries;            ///< ascending by estimate
  std::optional<std::uint64_t> shots;    ///< empty for exact distributions
  std::optional<std::uint64_t> seed;

  double mass_at(std::uint64_t grid_index) const;
};

/// Exact measured distribution of the evaluation register, folded so that
/// z and 2^n - z share one entry. The circuit's classical register must be
/// the n-bit evaluation register.
EstimateDistribution exact_distribution(const Circuit& circuit, std::size_t eval_qubits);
EstimateDistribution exact_distribution(const Circuit& circuit, const QaeProblem& problem);

/// Multinomial draw of `shots` outcomes from the exact distribution.
/// Bit-reproducible for a given seed.
EstimateDistribution sample_shots(const Circuit& circuit, std::uint64_t shots,
                                  std::uint64_t seed);

struct PricedEstimate {
  double estimate = 0.0;
  double value = 0.0;
};

/// Mode of the distribution (ties go to the smaller estimate) priced through
/// the T-Bill's expected value.
PricedEstimate estimate_and_price(const EstimateDistribution& dist, const bond::TBill& tb);

/// `estimate,mass` for exact and `estimate,count,frequency` for sampled
/// distributions.
std::string distribution_csv(const EstimateDistribution& dist);

}  // namespace qae
