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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qae/circuit.hpp"

namespace qae {

/// Undirected, connected device connectivity graph with precomputed
/// all-pairs hop distances.
class CouplingMap {
 public:
  using Edge = std::pair<Qubit, Qubit>;

  /// Throws StructuralError on self-loops, out-of-range indices or a
  /// disconnected graph. Duplicate edges (in either orientation) collapse.
  CouplingMap(std::string name, std::size_t qubit_count, std::vector<Edge> edges);

  const std::string& name() const noexcept { return name_; }
  std::size_t qubit_count() const noexcept { return qubit_count_; }
  /// Normalized (min, max) and sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool adjacent(Qubit a, Qubit b) const { return adjacency_[a * qubit_count_ + b]; }
  std::size_t distance(Qubit a, Qubit b) const { return distance_[a * qubit_count_ + b]; }
  const std::vector<Qubit>& neighbors(Qubit q) const { return neighbors_[q]; }
  std::size_t degree(Qubit q) const { return neighbors_[q].size(); }
  std::size_t max_degree() const;

  bool is_complete() const { return edges_.size() == qubit_count_ * (qubit_count_ - 1) / 2; }

 private:
  std::string name_;
  std::size_t qubit_count_;
  std::vector<Edge> edges_;
  std::vector<bool> adjacency_;
  std::vector<std::size_t> distance_;
  std::vector<std::vector<Qubit>> neighbors_;
};

/// Complete graph on k qubits, named "all-to-all(k)".
CouplingMap all_to_all(std::size_t k);

/// Plain-text format: first non-comment line `name qubit_count`, then one
/// `u v` edge per line; `#` starts a comment. ParseError on malformed lines.
CouplingMap parse_coupling_map(std::string_view text);
CouplingMap load_coupling_map(const std::string& path);
std::string format_coupling_map(const CouplingMap& map);

/// "yorktown", "tokyo", "cairo" (shipped data files) or "all-to-all(k)".
/// LookupError for anything else.
CouplingMap builtin_coupling_map(std::string_view name);

}  // namespace qae
