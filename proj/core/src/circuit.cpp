// SPDX-License-Identifier: Apache-2.0
#include "drvqa/circuit.hpp"

#include <cmath>

namespace drvqa {

bool gate_is_rotation(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::RZZ:
      return true;
    default:
      return false;
  }
}

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
      return 1;
    default:
      return 2;
  }
}

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::RZZ: return "RZZ";
  }
  return "?";
}

CMatrix gate_unitary(const Gate& gate) {
  const Complex i(0.0, 1.0);
  const double half = 0.5 * gate.angle;
  switch (gate.kind) {
    case GateKind::H: {
      CMatrix u(2, 2);
      const double s = 1.0 / std::sqrt(2.0);
      u << s, s, s, -s;
      return u;
    }
    case GateKind::RX: {
      CMatrix u(2, 2);
      u << std::cos(half), -i * std::sin(half), -i * std::sin(half), std::cos(half);
      return u;
    }
    case GateKind::RY: {
      CMatrix u(2, 2);
      u << std::cos(half), -std::sin(half), std::sin(half), std::cos(half);
      return u;
    }
    case GateKind::RZ: {
      CMatrix u = CMatrix::Zero(2, 2);
      u(0, 0) = std::exp(-i * half);
      u(1, 1) = std::exp(i * half);
      return u;
    }
    case GateKind::CNOT: {
      CMatrix u = CMatrix::Zero(4, 4);
      u(0, 0) = 1.0; // |00> -> |00>
      u(1, 1) = 1.0; // |01> -> |01>
      u(2, 3) = 1.0; // |11> -> |10>
      u(3, 2) = 1.0; // |10> -> |11>
      return u;
    }
    case GateKind::CZ: {
      CMatrix u = CMatrix::Identity(4, 4);
      u(3, 3) = -1.0;
      return u;
    }
    case GateKind::RZZ: {
      CMatrix u = CMatrix::Zero(4, 4);
      u(0, 0) = std::exp(-i * half);
      u(1, 1) = std::exp(i * half);
      u(2, 2) = std::exp(i * half);
      u(3, 3) = std::exp(-i * half);
      return u;
    }
  }
  throw domain_error("gate_unitary: unknown gate kind");
}

void Circuit::append(Gate gate) {
  const int arity = gate_arity(gate.kind);
  if (static_cast<int>(gate.targets.size()) != arity) {
    throw domain_error("Circuit::append: wrong target count for gate");
  }
  for (int q : gate.targets) {
    if (q < 0 || q >= n_qubits) {
      throw domain_error("Circuit::append: target qubit out of range");
    }
  }
  if (arity == 2 && gate.targets[0] == gate.targets[1]) {
    throw domain_error("Circuit::append: two-qubit gate targets must be distinct");
  }
  if (gate_is_rotation(gate.kind) && !std::isfinite(gate.angle)) {
    throw domain_error("Circuit::append: rotation angle must be finite");
  }
  gates.push_back(std::move(gate));
}

} // namespace drvqa
