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

#include "qae/unitary.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "qae/error.hpp"

namespace qae {
namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

ComplexMatrix u3(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  ComplexMatrix m(2, 2);
  m << c, -std::exp(kI * lambda) * s,  //
      std::exp(kI * phi) * s, std::exp(kI * (phi + lambda)) * c;
  return m;
}

ComplexMatrix ry(double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  ComplexMatrix m(2, 2);
  m << c, -s, s, c;
  return m;
}

std::size_t local_index(std::size_t basis, const std::vector<Qubit>& qubits) {
  std::size_t l = 0;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    l |= ((basis >> qubits[i]) & 1U) << i;
  }
  return l;
}

std::size_t gate_mask(const std::vector<Qubit>& qubits) {
  std::size_t mask = 0;
  for (Qubit q : qubits) mask |= std::size_t{1} << q;
  return mask;
}

}  // namespace

ComplexMatrix local_matrix(const GateInstance& gate) {
  const auto& p = gate.params;
  switch (gate.kind) {
    case GateKind::H: {
      ComplexMatrix m(2, 2);
      const double r = 1.0 / std::sqrt(2.0);
      m << r, r, r, -r;
      return m;
    }
    case GateKind::X: {
      ComplexMatrix m(2, 2);
      m << 0, 1, 1, 0;
      return m;
    }
    case GateKind::SX: {
      ComplexMatrix m(2, 2);
      m << cplx(0.5, 0.5), cplx(0.5, -0.5), cplx(0.5, -0.5), cplx(0.5, 0.5);
      return m;
    }
    case GateKind::RZ: {
      ComplexMatrix m = ComplexMatrix::Zero(2, 2);
      m(0, 0) = std::exp(-kI * (p[0] / 2));
      m(1, 1) = std::exp(kI * (p[0] / 2));
      return m;
    }
    case GateKind::RX: {
      ComplexMatrix m(2, 2);
      const double c = std::cos(p[0] / 2);
      const double s = std::sin(p[0] / 2);
      m << c, -kI * s, -kI * s, c;
      return m;
    }
    case GateKind::RY:
      return ry(p[0]);
    case GateKind::U:
      return u3(p[0], p[1], p[2]);
    case GateKind::CX: {
      ComplexMatrix m = ComplexMatrix::Zero(4, 4);
      m(0, 0) = m(2, 2) = 1;
      m(1, 3) = m(3, 1) = 1;
      return m;
    }
    case GateKind::CRY: {
      ComplexMatrix m = ComplexMatrix::Zero(4, 4);
      const ComplexMatrix r = ry(p[0]);
      m(0, 0) = m(2, 2) = 1;
      m(1, 1) = r(0, 0);
      m(1, 3) = r(0, 1);
      m(3, 1) = r(1, 0);
      m(3, 3) = r(1, 1);
      return m;
    }
    case GateKind::CP: {
      ComplexMatrix m = ComplexMatrix::Identity(4, 4);
      m(3, 3) = std::exp(kI * p[0]);
      return m;
    }
    case GateKind::RXX: {
      // exp(-i a/2 X(x)X): X(x)X maps local index l to l ^ 3.
      ComplexMatrix m = ComplexMatrix::Zero(4, 4);
      const double c = std::cos(p[0] / 2);
      const cplx s = -kI * std::sin(p[0] / 2);
      for (int l = 0; l < 4; ++l) {
        m(l, l) = c;
        m(l ^ 3, l) = s;
      }
      return m;
    }
    case GateKind::SWAP: {
      ComplexMatrix m = ComplexMatrix::Zero(4, 4);
      m(0, 0) = m(3, 3) = 1;
      m(1, 2) = m(2, 1) = 1;
      return m;
    }
    case GateKind::MEASURE:
      throw StructuralError("measure has no unitary");
  }
  throw StructuralError("unknown gate kind");
}

ComplexMatrix gate_unitary(const GateInstance& gate, std::size_t width) {
  validate_gate(gate, width, std::numeric_limits<std::size_t>::max());
  if (width > kMaxUnitaryWidth) {
    throw CapabilityError("gate_unitary: width " + std::to_string(width) +
                          " exceeds dense guard");
  }
  const ComplexMatrix local = local_matrix(gate);
  const std::size_t dim = std::size_t{1} << width;
  const std::size_t mask = gate_mask(gate.qubits);
  ComplexMatrix full = ComplexMatrix::Zero(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if ((r & ~mask) != (c & ~mask)) continue;
      full(r, c) = local(local_index(r, gate.qubits), local_index(c, gate.qubits));
    }
  }
  return full;
}

ComplexMatrix circuit_unitary(const Circuit& circuit) {
  if (circuit.width() > kMaxUnitaryWidth) {
    throw CapabilityError("circuit_unitary: width " +
                          std::to_string(circuit.width()) +
                          " exceeds dense guard of " +
                          std::to_string(kMaxUnitaryWidth));
  }
  const std::size_t dim = std::size_t{1} << circuit.width();
  ComplexMatrix acc = ComplexMatrix::Identity(dim, dim);
  std::vector<std::size_t> rows;
  Eigen::VectorXcd block;
  for (const auto& gate : circuit.gates()) {
    if (gate.kind == GateKind::MEASURE) {
      throw StructuralError("circuit_unitary: circuit contains measurements");
    }
    const ComplexMatrix local = local_matrix(gate);
    const std::size_t ldim = static_cast<std::size_t>(local.rows());
    const std::size_t mask = gate_mask(gate.qubits);
    rows.resize(ldim);
    block.resize(static_cast<Eigen::Index>(ldim));
    // Left-multiply by the embedded gate: mix each group of rows that differ
    // only on the gate's qubits.
    for (std::size_t base = 0; base < dim; ++base) {
      if ((base & mask) != 0) continue;
      for (std::size_t l = 0; l < ldim; ++l) {
        std::size_t r = base;
        for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
          if ((l >> i) & 1U) r |= std::size_t{1} << gate.qubits[i];
        }
        rows[l] = r;
      }
      for (std::size_t col = 0; col < dim; ++col) {
        for (std::size_t l = 0; l < ldim; ++l) {
          block(static_cast<Eigen::Index>(l)) = acc(rows[l], col);
        }
        for (std::size_t l = 0; l < ldim; ++l) {
          cplx v = 0;
          for (std::size_t k = 0; k < ldim; ++k) {
            v += local(l, k) * block(static_cast<Eigen::Index>(k));
          }
          acc(rows[l], col) = v;
        }
      }
    }
  }
  return acc;
}

double phase_aligned_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw StructuralError("phase comparison: dimension mismatch");
  }
  if (a.size() == 0) return 0.0;
  Eigen::Index br = 0;
  Eigen::Index bc = 0;
  b.cwiseAbs().maxCoeff(&br, &bc);
  cplx phase{1.0, 0.0};
  const cplx ref_b = b(br, bc);
  const cplx ref_a = a(br, bc);
  if (std::abs(ref_b) > 0.0 && std::abs(ref_a) > 0.0) {
    phase = ref_a / ref_b;
    phase /= std::abs(phase);
  }
  return (a - phase * b).cwiseAbs().maxCoeff();
}

bool equivalent_up_to_global_phase(const ComplexMatrix& a,
                                   const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return phase_aligned_distance(a, b) <= tol;
}

}  // namespace qae
