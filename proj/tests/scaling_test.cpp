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

#include "qae/scaling.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <random>
#include <regex>
#include <sstream>

#include "qae/error.hpp"

using namespace qae;

namespace {

std::vector<std::pair<double, double>> exact_points(double a2, double a1, double a0) {
  std::vector<std::pair<double, double>> pts;
  for (int n = 1; n <= 19; ++n) pts.emplace_back(n, (a2 * n + a1) * n + a0);
  return pts;
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) {
    if (!line.starts_with("#")) lines.push_back(line);
  }
  return lines;
}

ScalingConfig small_config() {
  ScalingConfig config;
  for (const char* b : {"iontrap", "ideal", "tokyo", "cairo"}) {
    config.backends.push_back(builtin_backend(b));
  }
  config.n_min = 1;
  config.n_max = 6;
  config.trials = 4;
  config.seed = 77;
  return config;
}

}  // namespace

TEST(scaling, summarize_statistics) {
  const std::vector<std::size_t> counts = {10, 12, 14, 20};
  const ScalingRecord r = summarize("x", 3, counts);
  EXPECT_DOUBLE_EQ(r.mean, 14.0);
  // Sample variance: (16 + 4 + 0 + 36) / 3.
  EXPECT_NEAR(r.std, std::sqrt(56.0 / 3.0), 1e-12);
  EXPECT_NEAR(r.sem, std::sqrt(56.0 / 3.0) / 2.0, 1e-12);
  EXPECT_EQ(r.min, 10.0);
  EXPECT_EQ(r.max, 20.0);
  const std::vector<std::size_t> one = {5};
  EXPECT_EQ(summarize("x", 1, one).std, 0.0);
}

TEST(scaling, fit_recovers_exact_quadratics) {
  const QuadraticFit ion = fit_quadratic(exact_points(1, 0, 0));
  EXPECT_NEAR(ion.a2, 1.0, 1e-9);
  EXPECT_NEAR(ion.a1, 0.0, 1e-9);
  EXPECT_NEAR(ion.a0, 0.0, 1e-9);
  EXPECT_NEAR(ion.r_squared, 1.0, 1e-12);
  const QuadraticFit ideal = fit_quadratic(exact_points(1, 1, 0));
  EXPECT_NEAR(ideal.a2, 1.0, 1e-9);
  EXPECT_NEAR(ideal.a1, 1.0, 1e-9);
  EXPECT_NEAR(ideal.a0, 0.0, 1e-9);
  EXPECT_NEAR(ideal.r_squared, 1.0, 1e-12);
  const QuadraticFit flat = fit_quadratic(exact_points(0, 0, 4.5));
  EXPECT_NEAR(flat.a2, 0.0, 1e-9);
  EXPECT_NEAR(flat.a1, 0.0, 1e-9);
  EXPECT_NEAR(flat.a0, 4.5, 1e-9);
  EXPECT_NEAR(flat(7.0), 4.5, 1e-9);
}

TEST(scaling, fit_matches_independent_least_squares) {
  std::mt19937_64 gen(61);
  std::normal_distribution<double> noise(0.0, 3.0);
  std::vector<std::pair<double, double>> pts;
  for (int n = 1; n <= 19; ++n) pts.emplace_back(n, 2.1 * n * n - 4.7 * n + 6.8 + noise(gen));
  // Reference solution through a QR decomposition of the design matrix.
  Eigen::MatrixXd design(19, 3);
  Eigen::VectorXd y(19);
  for (int i = 0; i < 19; ++i) {
    design(i, 0) = pts[i].first * pts[i].first;
    design(i, 1) = pts[i].first;
    design(i, 2) = 1.0;
    y(i) = pts[i].second;
  }
  const Eigen::VectorXd coef = design.colPivHouseholderQr().solve(y);
  const double mean = y.mean();
  const double ss_tot = (y.array() - mean).square().sum();
  const double ss_res = (design * coef - y).squaredNorm();
  const QuadraticFit fit = fit_quadratic(pts);
  EXPECT_NEAR(fit.a2, coef(0), 1e-9);
  EXPECT_NEAR(fit.a1, coef(1), 1e-9);
  EXPECT_NEAR(fit.a0, coef(2), 1e-9);
  EXPECT_NEAR(fit.r_squared, 1.0 - ss_res / ss_tot, 1e-12);
}

TEST(scaling, weighted_fit) {
  auto pts = exact_points(1, 2, 3);
  pts.emplace_back(10.0, 1000.0);  // outlier
  std::vector<double> weights(pts.size(), 1.0);
  weights.back() = 0.0;
  const QuadraticFit fit = fit_quadratic(pts, std::span<const double>(weights));
  EXPECT_NEAR(fit.a2, 1.0, 1e-9);
  EXPECT_NEAR(fit.a1, 2.0, 1e-9);
  EXPECT_NEAR(fit.a0, 3.0, 1e-9);
}

TEST(scaling, fit_needs_three_distinct_points) {
  const std::vector<std::pair<double, double>> two = {{1, 1}, {2, 4}, {2, 4.5}};
  EXPECT_THROW(fit_quadratic(two), FitError);
  EXPECT_THROW(fit_quadratic({}), FitError);
}

TEST(scaling, deterministic_backends) {
  ScalingConfig config;
  config.backends = {builtin_backend("iontrap"), builtin_backend("ideal")};
  config.n_min = 1;
  config.n_max = 19;
  config.trials = 3;
  const ScalingRun run = run_scaling(config);
  ASSERT_EQ(run.records.size(), 38u);
  EXPECT_TRUE(run.failures.empty());
  for (const auto& r : run.records) {
    const double expected = r.backend == "iontrap" ? double(r.n * r.n) : double(r.n * r.n + r.n);
    EXPECT_EQ(r.mean, expected);
    EXPECT_EQ(r.sem, 0.0);
    EXPECT_EQ(r.counts, std::vector<std::size_t>(3, static_cast<std::size_t>(expected)));
  }
  EXPECT_EQ(run.records[4].backend, "iontrap");
  EXPECT_EQ(run.records[4].mean, 25.0);
  EXPECT_EQ(run.records[19 + 4].mean, 30.0);
}

TEST(scaling, capacity_failures_are_recorded) {
  ScalingConfig config;
  config.backends = {builtin_backend("yorktown")};
  config.n_min = 1;
  config.n_max = 6;
  config.trials = 2;
  const ScalingRun run = run_scaling(config);
  ASSERT_EQ(run.records.size(), 4u);
  ASSERT_EQ(run.failures.size(), 2u);
  EXPECT_EQ(run.failures[0].n, 5u);
  EXPECT_EQ(run.failures[1].n, 6u);
  EXPECT_THROW(builtin_backend("eagle"), LookupError);
}

TEST(scaling, run_is_deterministic_and_thread_independent) {
  ScalingConfig config = small_config();
  config.threads = 1;
  const ScalingRun serial = run_scaling(config);
  config.threads = 4;
  const ScalingRun parallel = run_scaling(config);
  const OutputMeta meta{config.seed, config.trials, config.p};
  EXPECT_EQ(emit_csv(serial.records, meta), emit_csv(parallel.records, meta));
  EXPECT_EQ(emit_csv(run_scaling(config).records, meta), emit_csv(parallel.records, meta));
}

TEST(scaling, csv_layout_and_round_trip) {
  const std::vector<std::size_t> counts = {12, 15, 15};
  const std::vector<ScalingRecord> one = {summarize("tokyo", 3, counts)};
  const std::string csv = emit_csv(one, OutputMeta{});
  EXPECT_TRUE(csv.starts_with("# qaescale 0.1.0 seed=1234 trials=16 p=0.2\n"));
  const auto lines = data_lines(csv);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "backend,n,trials,mean,std,sem,min,max");

  const ScalingRun run = run_scaling(small_config());
  const auto back = parse_csv(emit_csv(run.records, OutputMeta{}));
  ASSERT_EQ(back.size(), run.records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].backend, run.records[i].backend);
    EXPECT_EQ(back[i].n, run.records[i].n);
    EXPECT_EQ(back[i].trials, run.records[i].trials);
    EXPECT_NEAR(back[i].mean, run.records[i].mean, 1e-9);
    EXPECT_NEAR(back[i].std, run.records[i].std, 1e-9);
    EXPECT_NEAR(back[i].sem, run.records[i].sem, 1e-9);
    EXPECT_NEAR(back[i].min, run.records[i].min, 1e-9);
    EXPECT_NEAR(back[i].max, run.records[i].max, 1e-9);
  }
}

TEST(scaling, csv_parse_errors) {
  EXPECT_THROW(parse_csv("backend,n\n"), ParseError);
  EXPECT_THROW(parse_csv("backend,n,trials,mean,std,sem,min,max\nx,1,2,3\n"), ParseError);
  EXPECT_THROW(parse_csv("backend,n,trials,mean,std,sem,min,max\nx,one,2,3,4,5,6,7\n"),
               ParseError);
}

TEST(scaling, plot_has_one_series_per_backend) {
  const ScalingRun run = run_scaling(small_config());
  const auto fits = fit_records(run.records);
  ASSERT_EQ(fits.size(), 4u);
  const std::string svg = emit_plot(run.records, fits, OutputMeta{});
  EXPECT_TRUE(svg.starts_with("<?xml") || svg.starts_with("<svg"));
  const std::regex series(R"re(<g class="series" data-backend="([a-z]+)")re");
  std::vector<std::string> names;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), series); it != std::sregex_iterator();
       ++it) {
    names.push_back((*it)[1]);
  }
  EXPECT_EQ(names, (std::vector<std::string>{"iontrap", "ideal", "tokyo", "cairo"}));
  const std::regex legend(R"re(<text class="legend"[^>]*>([a-z]+)</text>)re");
  std::vector<std::string> legends;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), legend); it != std::sregex_iterator();
       ++it) {
    legends.push_back((*it)[1]);
  }
  EXPECT_EQ(legends, names);
}
