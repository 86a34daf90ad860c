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

#include "qae/qasm.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>

#include "qae/error.hpp"

namespace qae {
namespace {

std::string format_angle(double v) {
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return std::string(buf.data());
}

constexpr std::array<GateKind, 13> kAllKinds = {
    GateKind::H,   GateKind::X,   GateKind::SX,  GateKind::RZ,   GateKind::RX,
    GateKind::RY,  GateKind::U,   GateKind::CX,  GateKind::CRY,  GateKind::CP,
    GateKind::RXX, GateKind::SWAP, GateKind::MEASURE};

std::optional<GateKind> kind_from_name(std::string_view name) {
  for (GateKind k : kAllKinds) {
    if (gate_name(k) == name) return k;
  }
  return std::nullopt;
}

// Cursor over one statement. Every failure raises ParseError for `line`.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, what);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_past(char c) {
    const std::size_t found = text_.find(c, pos_);
    if (found == std::string_view::npos) fail(std::string("missing '") + c + "'");
    pos_ = found + 1;
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
      return false;
    }
    pos_ = end;
    return true;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected integer");
    return std::stoull(std::string(text_.substr(start, pos_ - start)));
  }

  // expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)* ;
  // factor := ('-'|'+') factor | number | 'pi' | '(' expr ')'
  double expr() {
    double v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = factor();
    for (;;) {
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        v /= factor();
      } else {
        return v;
      }
    }
  }

  double factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    if (accept('(')) {
      const double v = expr();
      expect(')');
      return v;
    }
    if (accept_word("pi")) return std::numbers::pi;
    skip_ws();
    const std::string rest(text_.substr(pos_));
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(rest, &used);
    } catch (const std::exception&) {
      fail("expected number");
    }
    pos_ += used;
    return v;
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::size_t register_index(Cursor& cur, const std::string& reg) {
  if (cur.identifier() != reg) cur.fail("unknown register");
  cur.expect('[');
  const std::size_t idx = cur.integer();
  cur.expect(']');
  return idx;
}

}  // namespace

std::string qasm_export(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  if (circuit.width() > 0) out << "qreg q[" << circuit.width() << "];\n";
  if (circuit.classical_width() > 0) {
    out << "creg c[" << circuit.classical_width() << "];\n";
  }
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::MEASURE) {
      out << "measure q[" << g.qubits[0] << "] -> c[" << g.clbit << "];\n";
      continue;
    }
    out << gate_name(g.kind);
    if (!g.params.empty()) {
      out << '(';
      for (std::size_t i = 0; i < g.params.size(); ++i) {
        if (i != 0) out << ',';
        out << format_angle(g.params[i]);
      }
      out << ')';
    }
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      out << (i == 0 ? " " : ",") << "q[" << g.qubits[i] << ']';
    }
    out << ";\n";
  }
  return out.str();
}

Circuit qasm_import(std::string_view text) {
  std::optional<std::string> qreg_name;
  std::optional<std::string> creg_name;
  std::size_t width = 0;
  std::size_t classical_width = 0;
  std::vector<GateInstance> pending;

  std::istringstream lines{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto c = line.find("//"); c != std::string_view::npos) {
      line = line.substr(0, c);
    }
    Cursor cur(line, line_no);
    if (cur.at_end()) continue;

    const auto declare = [&](std::optional<std::string>& slot, std::size_t& size) {
      const std::string name = cur.identifier();
      cur.expect('[');
      const std::size_t n = cur.integer();
      cur.expect(']');
      cur.expect(';');
      if (slot) cur.fail("only one register of each type is supported");
      slot = name;
      size = n;
    };

    if (cur.accept_word("OPENQASM")) {
      cur.expr();
      cur.expect(';');
    } else if (cur.accept_word("include")) {
      cur.expect('"');
      cur.skip_past('"');
      cur.expect(';');
    } else if (cur.accept_word("qreg")) {
      declare(qreg_name, width);
    } else if (cur.accept_word("creg")) {
      declare(creg_name, classical_width);
    } else {
      const std::string word = cur.identifier();
      const auto kind = kind_from_name(word);
      if (!kind) cur.fail("unknown statement '" + word + "'");
      if (!qreg_name) cur.fail("gate before qreg declaration");
      GateInstance g;
      g.kind = *kind;
      if (*kind == GateKind::MEASURE) {
        if (!creg_name) cur.fail("measure before creg declaration");
        g.qubits.push_back(static_cast<Qubit>(register_index(cur, *qreg_name)));
        cur.expect('-');
        cur.expect('>');
        g.clbit = static_cast<std::uint32_t>(register_index(cur, *creg_name));
      } else {
        if (cur.accept('(')) {
          if (!cur.accept(')')) {
            do {
              g.params.push_back(cur.expr());
            } while (cur.accept(','));
            cur.expect(')');
          }
        }
        do {
          g.qubits.push_back(static_cast<Qubit>(register_index(cur, *qreg_name)));
        } while (cur.accept(','));
      }
      cur.expect(';');
      if (!cur.at_end()) cur.fail("one statement per line");
      try {
        validate_gate(g, width, classical_width);
      } catch (const StructuralError& e) {
        throw ParseError(line_no, e.what());
      }
      pending.push_back(std::move(g));
      continue;
    }
    if (!cur.at_end()) cur.fail("one statement per line");
  }

  Circuit circuit(width, classical_width);
  for (auto& g : pending) circuit.append(std::move(g));
  return circuit;
}

}  // namespace qae
