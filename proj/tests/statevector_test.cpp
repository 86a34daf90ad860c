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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qae/amplitude_estimation.hpp"
#include "qae/error.hpp"
#include "qae/transpiler.hpp"
#include "qae/unitary.hpp"

using namespace qae;
namespace o = qae::oracle;

TEST(statevector, hadamard) {
  Circuit c(1);
  c.h(0);
  const StateVector s = run_statevector(c);
  EXPECT_NEAR(s[0].real(), 0.70710678, 1e-8);
  EXPECT_NEAR(s[1].real(), 0.70710678, 1e-8);
}

TEST(statevector, ry_encodes_probability) {
  Circuit c(1);
  c.ry(theta_from_p(0.2), 0);
  EXPECT_NEAR(run_statevector(c)[1].real(), 0.44721, 1e-5);
  EXPECT_NEAR(std::norm(run_statevector(c)[1]), 0.2, 1e-15);
}

TEST(statevector, x_involution) {
  Circuit c(1);
  c.x(0).x(0);
  const StateVector s = run_statevector(c);
  EXPECT_EQ(s[0], std::complex<double>(1.0));
  EXPECT_EQ(s[1], std::complex<double>(0.0));
}

TEST(statevector, matches_matrix_oracle_with_normalization) {
  std::mt19937_64 gen(31);
  std::uniform_int_distribution<std::size_t> width_dist(1, 6);
  std::uniform_int_distribution<int> size_dist(0, 30);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t w = width_dist(gen);
    Circuit c(w);
    const int count = size_dist(gen);
    for (int i = 0; i < count; ++i) c.append(o::random_gate(gen, w));
    double worst_norm = 0.0;
    const StateVector s = run_statevector(c, [&](std::size_t, const StateVector& st) {
      worst_norm = std::max(worst_norm, std::abs(st.norm_squared() - 1.0));
    });
    EXPECT_LE(worst_norm, 1e-10);
    const o::Mat u = o::circuit_matrix(c);
    for (std::size_t i = 0; i < s.amplitudes().size(); ++i) {
      EXPECT_LE(std::abs(s[i] - u(static_cast<Eigen::Index>(i), 0)), 1e-10);
    }
  }
}

TEST(statevector, rejects_oversized_circuits) {
  EXPECT_THROW(run_statevector(Circuit(kMaxSimulationWidth + 1)), CapabilityError);
}

TEST(statevector, measured_probabilities_follow_measure_mapping) {
  Circuit c(2, 2);
  c.x(1).measure(1, 0).measure(0, 1);
  const auto p = measured_probabilities(c);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_NEAR(p[1], 1.0, 1e-15);
}

TEST(statevector, exact_distribution_matches_phase_estimation_oracle) {
  for (double p : {0.05, 0.2, 0.37, 0.5, 0.81}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const QaeProblem q = make_problem(p, n);
      const EstimateDistribution d = exact_distribution(build_qae(q), q);
      const std::vector<double> expected = o::qae_distribution(q.theta, n);
      ASSERT_EQ(d.entries.size(), expected.size());
      for (std::size_t k = 0; k < expected.size(); ++k) {
        EXPECT_NEAR(d.mass_at(k), expected[k], 1e-10) << "p=" << p << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(statevector, grid_aligned_probability_is_deterministic) {
  const QaeProblem q = make_problem(0.5, 3);
  const EstimateDistribution d = exact_distribution(build_qae(q), q);
  EXPECT_NEAR(d.mass_at(2), 1.0, 1e-12);
  EXPECT_NEAR(d.entries[2].estimate, 0.5, 1e-15);
  for (std::size_t n = 1; n <= 5; ++n) {
    const QaeProblem zero = make_problem(0.0, n);
    EXPECT_NEAR(exact_distribution(build_qae(zero), zero).mass_at(0), 1.0, 1e-12);
  }
}

TEST(statevector, masses_sum_to_one) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const QaeProblem q = make_problem(0.3, n);
    const EstimateDistribution d = exact_distribution(build_qae(q), q);
    double total = 0.0;
    for (const auto& e : d.entries) total += e.mass;
    EXPECT_NEAR(total, 1.0, 1e-9);
    for (std::size_t i = 1; i < d.entries.size(); ++i) {
      EXPECT_LT(d.entries[i - 1].estimate, d.entries[i].estimate);
    }
  }
}

TEST(statevector, mode_and_price_for_fifth) {
  const QaeProblem q = make_problem(0.2, 3);
  const EstimateDistribution d = exact_distribution(build_qae(q), q);
  const PricedEstimate pe = estimate_and_price(d, bond::TBill{1.0, 0.0, 1.0, 0.5});
  EXPECT_NEAR(pe.estimate, 0.146, 5e-4);
  EXPECT_NEAR(pe.value, 0.146, 5e-4);
}

TEST(statevector, success_probability_bound) {
  for (double p : {0.1, 0.2, 0.3, 0.7}) {
    for (std::size_t n : {3u, 4u, 5u}) {
      const QaeProblem q = make_problem(p, n);
      const EstimateDistribution d = exact_distribution(build_qae(q), q);
      std::size_t below = 0;
      while (below + 1 < d.entries.size() && d.entries[below + 1].estimate <= p) ++below;
      const double mass = d.entries[below].mass +
                          (below + 1 < d.entries.size() ? d.entries[below + 1].mass : 0.0);
      EXPECT_GE(mass, 8.0 / (std::numbers::pi * std::numbers::pi)) << p << ' ' << n;
    }
  }
}

TEST(statevector, transpiled_distribution_is_unchanged) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const QaeProblem q = make_problem(0.2, n);
    const Circuit c = build_qae(q);
    const EstimateDistribution ref = exact_distribution(c, q);
    for (const auto& target : {superconducting_gate_set(), iontrap_gate_set()}) {
      const EstimateDistribution low = exact_distribution(transpile(c, target), q);
      for (std::size_t k = 0; k < ref.entries.size(); ++k) {
        EXPECT_NEAR(low.entries[k].mass, ref.entries[k].mass, 1e-9) << target.name << ' ' << n;
      }
    }
  }
}

TEST(statevector, sampling_is_deterministic_per_seed) {
  const Circuit c = build_qae(make_problem(0.2, 3));
  const EstimateDistribution a = sample_shots(c, 10000, 42);
  const EstimateDistribution b = sample_shots(c, 10000, 42);
  EXPECT_EQ(distribution_csv(a), distribution_csv(b));
  std::uint64_t total = 0;
  for (const auto& e : a.entries) total += e.count;
  EXPECT_EQ(total, 10000u);
  EXPECT_EQ(a.shots, std::optional<std::uint64_t>(10000));
  EXPECT_EQ(a.seed, std::optional<std::uint64_t>(42));
  for (std::uint64_t seed : {1u, 2u, 3u, 99u}) {
    const auto pe = estimate_and_price(sample_shots(c, 10000, seed), bond::TBill{});
    EXPECT_NEAR(pe.estimate, 0.146, 5e-4);
  }
}

TEST(statevector, point_mass_sampling) {
  const Circuit c = build_qae(make_problem(0.0, 3));
  const EstimateDistribution d = sample_shots(c, 500, 7);
  EXPECT_EQ(d.entries[0].count, 500u);
  EXPECT_THROW(sample_shots(c, 0, 7), DomainError);
}

TEST(statevector, pricing_tie_prefers_smaller_estimate) {
  EstimateDistribution d;
  d.eval_qubits = 3;
  d.entries = {{0, 0.0, 0.0, 0}, {1, 0.146, 0.5, 0}, {2, 0.5, 0.0, 0}, {3, 0.854, 0.5, 0}};
  EXPECT_NEAR(estimate_and_price(d, bond::TBill{}).estimate, 0.146, 1e-15);
  d.entries = {{0, 0.0, 1.0, 0}, {1, 0.5, 0.0, 0}};
  EXPECT_EQ(estimate_and_price(d, bond::TBill{1.0, 0.25, 1.0, 0.5}).value, 0.25);
}

TEST(statevector, csv_formats) {
  const QaeProblem q = make_problem(0.0, 1);
  const Circuit c = build_qae(q);
  EXPECT_EQ(distribution_csv(exact_distribution(c, q)),
            "estimate,mass\n0.000000,1.000000000000\n1.000000,0.000000000000\n");
  EXPECT_EQ(distribution_csv(sample_shots(c, 4, 1)),
            "estimate,count,frequency\n0.000000,4,1.000000\n1.000000,0,0.000000\n");
}
