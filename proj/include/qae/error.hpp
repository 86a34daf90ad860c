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
#include <stdexcept>
#include <string>

namespace qae {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed circuit or gate: bad qubit index, duplicate operands, wrong
/// parameter count, matrix dimension mismatch.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation (p outside [0,1],
/// zero evaluation qubits, outcome index out of range).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a deliberate size guard (dense matrices, exhaustive search,
/// state-vector width) or a device's qubit count.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class FitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qae
