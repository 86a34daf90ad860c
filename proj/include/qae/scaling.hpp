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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qae/coupling_map.hpp"
#include "qae/router.hpp"
#include "qae/transpiler.hpp"

namespace qae {

inline constexpr std::string_view kToolName = "qaescale";
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Transpilation and routing target. An empty coupling map means all-to-all
/// connectivity, in which case no routing is performed.
struct BackendSpec {
  std::string name;
  NativeGateSet native;
  std::optional<CouplingMap> coupling;
};

/// "iontrap" (ion-trap gates, all-to-all), "ideal" (superconducting gates,
/// all-to-all), and "yorktown", "tokyo", "cairo" (superconducting gates on
/// the device map). LookupError otherwise.
BackendSpec builtin_backend(std::string_view name);

struct ScalingConfig {
  std::vector<BackendSpec> backends;
  std::size_t n_min = 1;
  std::size_t n_max = 19;
  std::size_t trials = 16;
  std::uint64_t seed = 1234;
  double p = 0.2;
  RouteOptions route;
  /// Worker threads for the (backend, n) grid; 0 picks hardware concurrency.
  std::size_t threads = 0;
};

struct ScalingRecord {
  std::string backend;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::vector<std::size_t> counts;  ///< per-trial two-qubit totals (empty when parsed from CSV)
  double mean = 0.0;
  double std = 0.0;  ///< sample standard deviation (N - 1); 0 for one trial
  double sem = 0.0;  ///< std / sqrt(trials)
  double min = 0.0;
  double max = 0.0;
};

/// A (backend, n) cell that could not run, e.g. a register wider than the device.
struct ScalingFailure {
  std::string backend;
  std::size_t n = 0;
  std::string message;
};

struct ScalingRun {
  std::vector<ScalingRecord> records;  ///< backend order of the config, n ascending
  std::vector<ScalingFailure> failures;
};

/// Summary statistics of per-trial counts.
ScalingRecord summarize(std::string backend, std::size_t n, std::span<const std::size_t> counts);

/// Builds the amplitude-estimation circuit for every n, routes it on
/// constrained backends with `trials` independent trials, lowers it, and
/// counts two-qubit gates. Cells run in parallel; the result does not depend
/// on the thread count.
ScalingRun run_scaling(const ScalingConfig& config);

struct QuadraticFit {
  double a2 = 0.0;
  double a1 = 0.0;
  double a0 = 0.0;
  double r_squared = 0.0;

  double operator()(double n) const { return (a2 * n + a1) * n + a0; }
};

/// Least-squares a2 n^2 + a1 n + a0 through (n, y) points via the normal
/// equations, optionally weighted. FitError with fewer than three distinct n.
/// r_squared = 1 - SS_res / SS_tot (1 when both vanish).
QuadraticFit fit_quadratic(std::span<const std::pair<double, double>> points,
                           std::optional<std::span<const double>> weights = std::nullopt);

/// Fit of per-n means for each backend, in first-appearance order. Backends
/// with fewer than three distinct n are skipped.
std::vector<std::pair<std::string, QuadraticFit>> fit_records(
    std::span<const ScalingRecord> records);

struct OutputMeta {
  std::uint64_t seed = 1234;
  std::size_t trials = 16;
  double p = 0.2;
};

/// `backend,n,trials,mean,std,sem,min,max` with a `#` comment header.
std::string emit_csv(std::span<const ScalingRecord> records, const OutputMeta& meta);

/// Inverse of emit_csv for the numeric fields. Comment lines are skipped.
std::vector<ScalingRecord> parse_csv(std::string_view text);

/// Static SVG 1.1 scatter of means with sem bars and fitted curves, one
/// series per backend.
std::string emit_plot(std::span<const ScalingRecord> records,
                      std::span<const std::pair<std::string, QuadraticFit>> fits,
                      const OutputMeta& meta);

}  // namespace qae
