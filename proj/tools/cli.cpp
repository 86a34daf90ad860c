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

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qae/amplitude_estimation.hpp"
#include "qae/bond.hpp"
#include "qae/error.hpp"
#include "qae/qasm.hpp"
#include "qae/router.hpp"
#include "qae/scaling.hpp"
#include "qae/statevector.hpp"
#include "qae/transpiler.hpp"

namespace qae::cli {
namespace {

std::string fixed(double v, int digits) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*f", digits, v);
  return std::string(buf.data());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LookupError("cannot write '" + path + "'");
  out << text;
  if (!out) throw LookupError("write to '" + path + "' failed");
}

std::string header(const std::string& command) {
  return "# " + std::string(kToolName) + " " + std::string(kToolVersion) + " " + command;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

struct Options {
  double p = 0.2;
  std::size_t eval_qubits = 3;
  std::string in;
  std::string out;
  std::string plot;
  std::string target = "superconducting";
  std::string device;
  std::string coupling_map;
  std::uint64_t shots = 0;
  std::uint64_t seed = 1234;
  std::size_t trials = 0;
  std::size_t n_min = 1;
  std::size_t n_max = 19;
  double v_low = 0.0;
  double v_high = 1.0;
  std::vector<std::string> backends = {"iontrap", "ideal", "tokyo", "cairo"};
};

int cmd_build(const Options& o, std::ostream& out) {
  const Circuit c = build_qae(make_problem(o.p, o.eval_qubits));
  const std::string text = qasm_export(c);
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
    out << "wrote " << o.out << ": width=" << c.width() << " gates=" << c.size()
        << " two_qubit=" << count_two_qubit_gates(c) << '\n';
  }
  return 0;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  Circuit c;
  std::string what;
  if (!o.in.empty()) {
    c = qasm_import(read_file(o.in));
    what = "in=" + o.in;
  } else {
    c = build_qae(make_problem(o.p, o.eval_qubits));
    what = "p=" + fixed(o.p, 6) + " eval_qubits=" + std::to_string(o.eval_qubits);
  }
  EstimateDistribution dist;
  if (o.shots > 0) {
    dist = sample_shots(c, o.shots, o.seed);
    what += " shots=" + std::to_string(o.shots) + " seed=" + std::to_string(o.seed);
  } else {
    dist = exact_distribution(c, c.classical_width());
    what += " shots=exact";
  }
  bond::TBill tb;
  tb.v_low = o.v_low;
  tb.v_high = o.v_high;
  const PricedEstimate priced = estimate_and_price(dist, tb);
  const std::string csv = header("simulate " + what) + "\n" + distribution_csv(dist);
  const std::string summary = "# mode=" + fixed(priced.estimate, 6) + " value=$" +
                              fixed(priced.value, 3) + " (v_low=" + fixed(o.v_low, 2) +
                              " v_high=" + fixed(o.v_high, 2) + ")\n";
  if (o.out.empty()) {
    out << csv << summary;
  } else {
    write_file(o.out, csv);
    out << summary;
  }
  return 0;
}

int cmd_transpile(const Options& o, std::ostream& out) {
  const Circuit c = qasm_import(read_file(o.in));
  const Circuit lowered = transpile(c, native_gate_set(o.target));
  const std::string text = qasm_export(lowered);
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
    out << "target=" << o.target << " gates=" << lowered.size()
        << " two_qubit=" << count_two_qubit_gates(lowered) << '\n';
  }
  return 0;
}

std::string layout_text(const Layout& layout) {
  std::string s;
  for (std::size_t l = 0; l < layout.size(); ++l) {
    if (l) s += ' ';
    s += std::to_string(l) + "->" + std::to_string(layout.physical(static_cast<Qubit>(l)));
  }
  return s;
}

int cmd_route(const Options& o, std::ostream& out) {
  const Circuit c = qasm_import(read_file(o.in));
  std::optional<CouplingMap> device;
  if (!o.coupling_map.empty()) {
    device = load_coupling_map(o.coupling_map);
  } else if (o.device == "all-to-all") {
    device = all_to_all(std::max<std::size_t>(c.width(), 1));
  } else {
    device = builtin_coupling_map(o.device);
  }
  const std::size_t trials = o.trials == 0 ? 64 : o.trials;
  const RoutedCircuit routed = route(c, *device, o.seed, trials);
  const std::size_t total = routed_two_qubit_count(routed, native_gate_set(o.target));
  if (!o.out.empty()) write_file(o.out, qasm_export(routed.circuit));
  out << "device=" << device->name() << " seed=" << o.seed << " trials=" << trials << '\n';
  out << "swap_count=" << routed.swap_count << '\n';
  out << "two_qubit_total=" << total << " (" << o.target << ")\n";
  out << "initial_layout=" << layout_text(routed.initial_layout) << '\n';
  out << "final_layout=" << layout_text(routed.final_layout) << '\n';
  return 0;
}

void print_fits(const std::vector<std::pair<std::string, QuadraticFit>>& fits,
                std::ostream& out) {
  out << "backend        a2          a1          a0          r_squared\n";
  for (const auto& [name, f] : fits) {
    std::array<char, 160> buf{};
    std::snprintf(buf.data(), buf.size(), "%-14s %-11.6f %-11.6f %-11.6f %.8f\n",
                  name.c_str(), f.a2, f.a1, f.a0, f.r_squared);
    out << buf.data();
  }
}

int cmd_scale(const Options& o, std::ostream& out, std::ostream& err) {
  ScalingConfig config;
  for (const auto& b : o.backends) config.backends.push_back(builtin_backend(b));
  config.n_min = o.n_min;
  config.n_max = o.n_max;
  config.trials = o.trials == 0 ? 16 : o.trials;
  config.seed = o.seed;
  config.p = o.p;
  const ScalingRun run = run_scaling(config);
  const OutputMeta meta{config.seed, config.trials, config.p};
  const auto fits = fit_records(run.records);

  if (!o.out.empty()) write_file(o.out, emit_csv(run.records, meta));
  if (!o.plot.empty()) write_file(o.plot, emit_plot(run.records, fits, meta));

  out << header("scale") << " seed=" << config.seed << " trials=" << config.trials
      << " p=" << fixed(config.p, 6) << '\n';
  out << "backend        n    mean        std         sem         min     max\n";
  for (const auto& r : run.records) {
    std::array<char, 160> buf{};
    std::snprintf(buf.data(), buf.size(), "%-14s %-4zu %-11.3f %-11.3f %-11.3f %-7.0f %.0f\n",
                  r.backend.c_str(), r.n, r.mean, r.std, r.sem, r.min, r.max);
    out << buf.data();
  }
  out << '\n';
  print_fits(fits, out);
  for (const auto& f : run.failures) {
    err << "skipped " << f.backend << " n=" << f.n << ": " << f.message << '\n';
  }
  return 0;
}

int cmd_fit(const Options& o, std::ostream& out) {
  const auto records = parse_csv(read_file(o.in));
  print_fits(fit_records(records), out);
  return 0;
}

}  // namespace

std::vector<std::string> apply_config(const std::vector<std::string>& args) {
  std::vector<std::string> result;
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[++i];
    } else if (args[i].starts_with("--config=")) {
      config_path = args[i].substr(9);
    } else {
      result.push_back(args[i]);
    }
  }
  if (config_path.empty()) return result;

  std::istringstream lines(read_file(config_path));
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.starts_with("--")) key = key.substr(2);
    if (key.empty()) continue;
    const std::string flag = "--" + key;
    const bool given = std::any_of(result.begin(), result.end(), [&](const std::string& a) {
      return a == flag || a.starts_with(flag + "=");
    });
    if (!given) {
      result.push_back(flag);
      result.push_back(value);
    }
  }
  return result;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Amplitude-estimation circuit synthesis, simulation, lowering and routing",
               std::string(kToolName)};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  app.set_help_all_flag("--help-all");
  app.add_option("--config", "key=value file mirroring the flags (flags win)");

  const auto add_problem = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "probability encoded on the objective qubit")
        ->check(CLI::Range(0.0, 1.0));
    sub->add_option("--eval-qubits", o.eval_qubits, "evaluation qubits n")
        ->check(CLI::Range(std::size_t{1}, kMaxEvalQubits));
  };

  auto* build = app.add_subcommand("build", "write the amplitude-estimation circuit as QASM");
  add_problem(build);
  build->add_option("--out", o.out, "output QASM file (stdout if omitted)");

  auto* simulate = app.add_subcommand("simulate", "exact or sampled estimate distribution");
  add_problem(simulate);
  simulate->add_option("--in", o.in, "simulate a QASM circuit instead of building one")
      ->check(CLI::ExistingFile);
  simulate->add_option("--shots", o.shots, "sample this many shots (exact if omitted)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", o.seed, "sampling seed");
  simulate->add_option("--v-low", o.v_low, "T-Bill low value");
  simulate->add_option("--v-high", o.v_high, "T-Bill high value");
  simulate->add_option("--out", o.out, "write the distribution CSV here");

  auto* transpile_cmd = app.add_subcommand("transpile", "lower a QASM circuit to a native set");
  transpile_cmd->add_option("--target", o.target)
      ->required()
      ->check(CLI::IsMember({"superconducting", "iontrap"}));
  transpile_cmd->add_option("--in", o.in)->required()->check(CLI::ExistingFile);
  transpile_cmd->add_option("--out", o.out, "output QASM file (stdout if omitted)");

  auto* route_cmd = app.add_subcommand("route", "insert SWAPs for a device topology");
  route_cmd->add_option("--device", o.device)
      ->check(CLI::IsMember({"yorktown", "tokyo", "cairo", "all-to-all"}));
  route_cmd->add_option("--coupling-map", o.coupling_map, "coupling-map file (overrides --device)")
      ->check(CLI::ExistingFile);
  route_cmd->add_option("--trials", o.trials, "routing trials (default 64)")
      ->check(CLI::PositiveNumber);
  route_cmd->add_option("--seed", o.seed);
  route_cmd->add_option("--in", o.in)->required()->check(CLI::ExistingFile);
  route_cmd->add_option("--target", o.target, "native set used for the two-qubit total")
      ->check(CLI::IsMember({"superconducting", "iontrap"}));
  route_cmd->add_option("--out", o.out, "write the routed (unlowered) circuit as QASM");

  auto* scale = app.add_subcommand("scale", "two-qubit-gate scaling experiment");
  scale->add_option("--backends", o.backends, "comma-separated backend names")
      ->delimiter(',')
      ->check(CLI::IsMember({"iontrap", "ideal", "yorktown", "tokyo", "cairo"}));
  scale->add_option("--min", o.n_min)->check(CLI::PositiveNumber);
  scale->add_option("--max", o.n_max)->check(CLI::PositiveNumber);
  scale->add_option("--trials", o.trials, "trials per (backend, n) (default 16)")
      ->check(CLI::PositiveNumber);
  scale->add_option("--seed", o.seed);
  scale->add_option("--p", o.p)->check(CLI::Range(0.0, 1.0));
  scale->add_option("--out", o.out, "CSV output file");
  scale->add_option("--plot", o.plot, "SVG output file");

  auto* fit = app.add_subcommand("fit", "fit quadratics to a scaling CSV");
  fit->add_option("--in", o.in)->required()->check(CLI::ExistingFile);

  std::vector<std::string> args;
  try {
    args = apply_config(raw_args);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (route_cmd->parsed() && o.device.empty() && o.coupling_map.empty()) {
      throw CLI::ValidationError("route", "either --device or --coupling-map is required");
    }
    if (scale->parsed() && o.n_max < o.n_min) {
      throw CLI::ValidationError("scale", "--max must not be below --min");
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (build->parsed()) return cmd_build(o, out);
    if (simulate->parsed()) return cmd_simulate(o, out);
    if (transpile_cmd->parsed()) return cmd_transpile(o, out);
    if (route_cmd->parsed()) return cmd_route(o, out);
    if (scale->parsed()) return cmd_scale(o, out, err);
    if (fit->parsed()) return cmd_fit(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace qae::cli
