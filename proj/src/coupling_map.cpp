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

#include "qae/coupling_map.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

#include "builtin_maps.hpp"
#include "qae/error.hpp"

namespace qae {

CouplingMap::CouplingMap(std::string name, std::size_t qubit_count, std::vector<Edge> edges)
    : name_(std::move(name)), qubit_count_(qubit_count) {
  if (qubit_count_ == 0) throw StructuralError("coupling map needs at least one qubit");
  for (auto& [a, b] : edges) {
    if (a == b) throw StructuralError("coupling map '" + name_ + "': self-loop");
    if (a >= qubit_count_ || b >= qubit_count_) {
      throw StructuralError("coupling map '" + name_ + "': qubit index out of range");
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  const std::size_t n = qubit_count_;
  adjacency_.assign(n * n, false);
  neighbors_.assign(n, {});
  for (const auto& [a, b] : edges_) {
    adjacency_[a * n + b] = adjacency_[b * n + a] = true;
    neighbors_[a].push_back(b);
    neighbors_[b].push_back(a);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());

  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
  distance_.assign(n * n, kUnreached);
  for (Qubit s = 0; s < n; ++s) {
    std::queue<Qubit> frontier;
    distance_[s * n + s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const Qubit u = frontier.front();
      frontier.pop();
      for (Qubit v : neighbors_[u]) {
        if (distance_[s * n + v] == kUnreached) {
          distance_[s * n + v] = distance_[s * n + u] + 1;
          frontier.push(v);
        }
      }
    }
  }
  if (std::find(distance_.begin(), distance_.end(), kUnreached) != distance_.end()) {
    throw StructuralError("coupling map '" + name_ + "' is not connected");
  }
}

std::size_t CouplingMap::max_degree() const {
  std::size_t d = 0;
  for (const auto& nb : neighbors_) d = std::max(d, nb.size());
  return d;
}

CouplingMap all_to_all(std::size_t k) {
  std::vector<CouplingMap::Edge> edges;
  for (Qubit a = 0; a < k; ++a) {
    for (Qubit b = a + 1; b < k; ++b) edges.emplace_back(a, b);
  }
  return CouplingMap("all-to-all(" + std::to_string(k) + ")", k, std::move(edges));
}

CouplingMap parse_coupling_map(std::string_view text) {
  std::istringstream lines{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::string name;
  std::size_t count = 0;
  bool have_header = false;
  std::vector<CouplingMap::Edge> edges;
  while (std::getline(lines, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::string first;
    if (!(fields >> first)) continue;
    if (!have_header) {
      if (!(fields >> count)) throw ParseError(line_no, "expected 'name qubit_count'");
      name = first;
      have_header = true;
    } else {
      long long u = 0;
      long long v = 0;
      try {
        std::size_t used = 0;
        u = std::stoll(first, &used);
        if (used != first.size()) throw std::invalid_argument(first);
      } catch (const std::exception&) {
        throw ParseError(line_no, "expected edge 'u v'");
      }
      if (!(fields >> v) || u < 0 || v < 0) {
        throw ParseError(line_no, "expected edge 'u v'");
      }
      edges.emplace_back(static_cast<Qubit>(u), static_cast<Qubit>(v));
    }
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "trailing text '" + extra + "'");
  }
  if (!have_header) throw ParseError(line_no, "missing 'name qubit_count' header");
  return CouplingMap(name, count, std::move(edges));
}

CouplingMap load_coupling_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot open coupling map file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_coupling_map(buf.str());
}

std::string format_coupling_map(const CouplingMap& map) {
  std::ostringstream out;
  out << map.name() << ' ' << map.qubit_count() << '\n';
  for (const auto& [a, b] : map.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

CouplingMap builtin_coupling_map(std::string_view name) {
  for (const auto& entry : detail::kBuiltinMaps) {
    if (entry.name == name) return parse_coupling_map(entry.text);
  }
  constexpr std::string_view prefix = "all-to-all(";
  if (name.starts_with(prefix) && name.ends_with(")")) {
    const std::string digits(name.substr(prefix.size(), name.size() - prefix.size() - 1));
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      return all_to_all(std::stoull(digits));
    }
  }
  throw LookupError("unknown coupling map '" + std::string(name) + "'");
}

}  // namespace qae
