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

#include <string>
#include <string_view>

#include "qae/circuit.hpp"

namespace qae {

/// Serializes to the OpenQASM 2.0-style subset: one statement per line,
/// single `q` and `c` registers, angles printed with round-trip precision.
std::string qasm_export(const Circuit& circuit);

/// Parses the subset written by qasm_export. Angle arguments may also be
/// simple arithmetic over numbers and `pi`. Throws ParseError carrying the
/// 1-based line number of the first offending statement.
Circuit qasm_import(std::string_view text);

}  // namespace qae
