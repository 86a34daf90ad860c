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

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "qae/amplitude_estimation.hpp"
#include "qae/error.hpp"
#include "qae/rng.hpp"

namespace qae {
namespace {

std::string num(double v, const char* spec = "%.15g") {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), spec, v);
  return std::string(buf.data());
}

std::string header_line(const OutputMeta& meta) {
  return std::string(kToolName) + " " + std::string(kToolVersion) +
         " seed=" + std::to_string(meta.seed) + " trials=" + std::to_string(meta.trials) +
         " p=" + num(meta.p);
}

struct Cell {
  std::size_t backend = 0;
  std::size_t n = 0;
};

struct CellResult {
  std::optional<ScalingRecord> record;
  std::optional<ScalingFailure> failure;
};

CellResult run_cell(const ScalingConfig& config, const Cell& cell) {
  const BackendSpec& backend = config.backends[cell.backend];
  CellResult result;
  try {
    const Circuit logical = build_qae(make_problem(config.p, cell.n));
    std::vector<std::size_t> counts;
    counts.reserve(config.trials);
    if (!backend.coupling) {
      const std::size_t count = count_two_qubit_gates(transpile(logical, backend.native));
      counts.assign(config.trials, count);
    } else {
      const std::uint64_t cell_seed =
          derive_seed(config.seed, fnv1a(backend.name) ^ (std::uint64_t{cell.n} << 32));
      for (std::size_t t = 0; t < config.trials; ++t) {
        const RoutedCircuit routed = route_trial(logical, *backend.coupling,
                                                 derive_seed(cell_seed, t), config.route);
        counts.push_back(routed_two_qubit_count(routed, backend.native));
      }
    }
    result.record = summarize(backend.name, cell.n, counts);
  } catch (const Error& e) {
    result.failure = ScalingFailure{backend.name, cell.n, e.what()};
  }
  return result;
}

}  // namespace

BackendSpec builtin_backend(std::string_view name) {
  if (name == "iontrap") return BackendSpec{"iontrap", iontrap_gate_set(), std::nullopt};
  if (name == "ideal") return BackendSpec{"ideal", superconducting_gate_set(), std::nullopt};
  if (name == "yorktown" || name == "tokyo" || name == "cairo") {
    return BackendSpec{std::string(name), superconducting_gate_set(),
                       builtin_coupling_map(name)};
  }
  throw LookupError("unknown backend '" + std::string(name) + "'");
}

ScalingRecord summarize(std::string backend, std::size_t n, std::span<const std::size_t> counts) {
  if (counts.empty()) throw DomainError("summarize needs at least one count");
  ScalingRecord r;
  r.backend = std::move(backend);
  r.n = n;
  r.trials = counts.size();
  r.counts.assign(counts.begin(), counts.end());
  double sum = 0.0;
  for (std::size_t c : counts) sum += static_cast<double>(c);
  const double size = static_cast<double>(counts.size());
  r.mean = sum / size;
  double ss = 0.0;
  for (std::size_t c : counts) ss += (static_cast<double>(c) - r.mean) * (static_cast<double>(c) - r.mean);
  r.std = counts.size() > 1 ? std::sqrt(ss / (size - 1.0)) : 0.0;
  r.sem = r.std / std::sqrt(size);
  const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
  r.min = static_cast<double>(*lo);
  r.max = static_cast<double>(*hi);
  return r;
}

ScalingRun run_scaling(const ScalingConfig& config) {
  if (config.n_min < 1) throw DomainError("n_min must be at least 1");
  if (config.n_max < config.n_min) throw DomainError("n_max must not be below n_min");
  if (config.trials < 1) throw DomainError("trials must be at least 1");
  if (!(config.p >= 0.0 && config.p <= 1.0)) throw DomainError("p must lie in [0, 1]");

  std::vector<Cell> cells;
  for (std::size_t b = 0; b < config.backends.size(); ++b) {
    for (std::size_t n = config.n_min; n <= config.n_max; ++n) cells.push_back({b, n});
  }
  std::vector<CellResult> results(cells.size());

  std::size_t workers = config.threads;
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(cells.size(), 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
          try {
            results[i] = run_cell(config, cells[i]);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);

  ScalingRun run;
  for (auto& r : results) {
    if (r.record) run.records.push_back(std::move(*r.record));
    if (r.failure) run.failures.push_back(std::move(*r.failure));
  }
  return run;
}

QuadraticFit fit_quadratic(std::span<const std::pair<double, double>> points,
                           std::optional<std::span<const double>> weights) {
  if (weights && weights->size() != points.size()) {
    throw FitError("weights and points differ in length");
  }
  std::set<double> distinct;
  for (const auto& [x, y] : points) distinct.insert(x);
  if (distinct.size() < 3) {
    throw FitError("quadratic fit needs at least three distinct n values");
  }

  // Normal equations: sum w x^(i+j) a_j = sum w x^i y, unknowns (a0, a1, a2).
  std::array<std::array<long double, 4>, 3> m{};
  for (std::size_t k = 0; k < points.size(); ++k) {
    const long double x = points[k].first;
    const long double y = points[k].second;
    const long double w = weights ? (*weights)[k] : 1.0L;
    const std::array<long double, 3> pw = {1.0L, x, x * x};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m[i][j] += w * pw[i] * pw[j];
      m[i][3] += w * pw[i] * y;
    }
  }
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < 3; ++r) {
      if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
    }
    if (m[pivot][col] == 0.0L) throw FitError("singular normal equations");
    std::swap(m[col], m[pivot]);
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == col) continue;
      const long double f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  QuadraticFit fit;
  fit.a0 = static_cast<double>(m[0][3] / m[0][0]);
  fit.a1 = static_cast<double>(m[1][3] / m[1][1]);
  fit.a2 = static_cast<double>(m[2][3] / m[2][2]);

  double mean = 0.0;
  for (const auto& [x, y] : points) mean += y;
  mean /= static_cast<double>(points.size());
  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (const auto& [x, y] : points) {
    ss_res += (y - fit(x)) * (y - fit(x));
    ss_tot += (y - mean) * (y - mean);
  }
  if (ss_tot == 0.0) {
    fit.r_squared = ss_res <= 1e-24 ? 1.0 : 0.0;
  } else {
    fit.r_squared = 1.0 - ss_res / ss_tot;
  }
  return fit;
}

std::vector<std::pair<std::string, QuadraticFit>> fit_records(
    std::span<const ScalingRecord> records) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::pair<double, double>>> points;
  for (const auto& r : records) {
    if (!points.contains(r.backend)) order.push_back(r.backend);
    points[r.backend].emplace_back(static_cast<double>(r.n), r.mean);
  }
  std::vector<std::pair<std::string, QuadraticFit>> fits;
  for (const auto& name : order) {
    try {
      fits.emplace_back(name, fit_quadratic(points[name]));
    } catch (const FitError&) {
    }
  }
  return fits;
}

std::string emit_csv(std::span<const ScalingRecord> records, const OutputMeta& meta) {
  std::ostringstream out;
  out << "# " << header_line(meta) << '\n';
  out << "backend,n,trials,mean,std,sem,min,max\n";
  for (const auto& r : records) {
    out << r.backend << ',' << r.n << ',' << r.trials << ',' << num(r.mean) << ','
        << num(r.std) << ',' << num(r.sem) << ',' << num(r.min) << ',' << num(r.max)
        << '\n';
  }
  return out.str();
}

std::vector<ScalingRecord> parse_csv(std::string_view text) {
  std::istringstream lines{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  std::vector<ScalingRecord> records;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      if (line != "backend,n,trials,mean,std,sem,min,max") {
        throw ParseError(line_no, "unexpected CSV header");
      }
      header = true;
      continue;
    }
    std::vector<std::string> fields;
    std::istringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 8) throw ParseError(line_no, "expected 8 fields");
    ScalingRecord r;
    try {
      r.backend = fields[0];
      r.n = std::stoull(fields[1]);
      r.trials = std::stoull(fields[2]);
      r.mean = std::stod(fields[3]);
      r.std = std::stod(fields[4]);
      r.sem = std::stod(fields[5]);
      r.min = std::stod(fields[6]);
      r.max = std::stod(fields[7]);
    } catch (const std::exception&) {
      throw ParseError(line_no, "malformed numeric field");
    }
    records.push_back(std::move(r));
  }
  if (!header) throw ParseError(line_no, "missing CSV header");
  return records;
}

std::string emit_plot(std::span<const ScalingRecord> records,
                      std::span<const std::pair<std::string, QuadraticFit>> fits,
                      const OutputMeta& meta) {
  if (records.empty()) throw DomainError("nothing to plot");
  constexpr double kWidth = 800, kHeight = 560;
  constexpr double kLeft = 70, kRight = 180, kTop = 30, kBottom = 60;
  constexpr std::array<const char*, 6> kColors = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                                  "#d62728", "#9467bd", "#8c564b"};
  constexpr std::array<const char*, 6> kDashes = {"", "8,4", "8,3,2,3", "2,3", "4,4", "1,2"};

  std::vector<std::string> order;
  double n_lo = records.front().n, n_hi = records.front().n, y_hi = 0.0;
  for (const auto& r : records) {
    if (std::find(order.begin(), order.end(), r.backend) == order.end()) order.push_back(r.backend);
    n_lo = std::min(n_lo, static_cast<double>(r.n));
    n_hi = std::max(n_hi, static_cast<double>(r.n));
    y_hi = std::max(y_hi, r.mean + r.sem);
  }
  if (n_hi == n_lo) n_hi = n_lo + 1;
  if (y_hi <= 0) y_hi = 1;
  y_hi *= 1.05;

  const auto sx = [&](double n) {
    return kLeft + (n - n_lo) / (n_hi - n_lo) * (kWidth - kLeft - kRight);
  };
  const auto sy = [&](double y) {
    return kHeight - kBottom - y / y_hi * (kHeight - kTop - kBottom);
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<!-- " << header_line(meta) << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes.
  out << "<g id=\"axes\" stroke=\"black\">\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(n_hi) << "\" y2=\""
      << sy(0) << "\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << sy(0) << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop << "\"/>\n";
  out << "</g>\n<g id=\"ticks\" text-anchor=\"middle\">\n";
  for (double n = n_lo; n <= n_hi; n += 1) {
    out << "<text x=\"" << num(sx(n), "%.2f") << "\" y=\"" << sy(0) + 18 << "\">" << n
        << "</text>\n";
  }
  for (int i = 0; i <= 5; ++i) {
    const double y = y_hi * i / 5.0;
    out << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(sy(y) + 4, "%.2f")
        << "\" text-anchor=\"end\">" << num(y, "%.0f") << "</text>\n";
  }
  out << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 15
      << "\">evaluation qubits n</text>\n";
  out << "<text transform=\"translate(18," << (kHeight - kBottom + kTop) / 2
      << ") rotate(-90)\">two-qubit gates</text>\n";
  out << "</g>\n";

  for (std::size_t s = 0; s < order.size(); ++s) {
    const std::string& name = order[s];
    const char* color = kColors[s % kColors.size()];
    out << "<g class=\"series\" data-backend=\"" << name << "\" stroke=\"" << color
        << "\" fill=\"" << color << "\">\n";
    for (const auto& r : records) {
      if (r.backend != name) continue;
      const double x = sx(static_cast<double>(r.n));
      out << "<line x1=\"" << num(x, "%.2f") << "\" y1=\"" << num(sy(r.mean - r.sem), "%.2f")
          << "\" x2=\"" << num(x, "%.2f") << "\" y2=\"" << num(sy(r.mean + r.sem), "%.2f")
          << "\"/>\n";
      out << "<circle cx=\"" << num(x, "%.2f") << "\" cy=\"" << num(sy(r.mean), "%.2f")
          << "\" r=\"3\"/>\n";
    }
    for (const auto& [fit_name, fit] : fits) {
      if (fit_name != name) continue;
      out << "<polyline fill=\"none\" stroke-width=\"1.5\"";
      if (*kDashes[s % kDashes.size()] != '\0') {
        out << " stroke-dasharray=\"" << kDashes[s % kDashes.size()] << "\"";
      }
      out << " points=\"";
      for (int i = 0; i <= 100; ++i) {
        const double n = n_lo + (n_hi - n_lo) * i / 100.0;
        const double y = std::clamp(fit(n), 0.0, y_hi);
        out << (i ? " " : "") << num(sx(n), "%.2f") << ',' << num(sy(y), "%.2f");
      }
      out << "\"/>\n";
    }
    const double ly = kTop + 20.0 * static_cast<double>(s);
    out << "<circle cx=\"" << kWidth - kRight + 20 << "\" cy=\"" << ly << "\" r=\"4\"/>\n";
    out << "<text class=\"legend\" x=\"" << kWidth - kRight + 30 << "\" y=\"" << ly + 4
        << "\" stroke=\"none\" fill=\"black\">" << name << "</text>\n";
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace qae
