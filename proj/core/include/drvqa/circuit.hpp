// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "drvqa/density_matrix.hpp"

namespace drvqa {

enum class GateKind { H, RX, RY, RZ, CNOT, CZ, RZZ };

bool gate_is_rotation(GateKind kind);
int gate_arity(GateKind kind);
const char* gate_name(GateKind kind);

struct Gate {
  GateKind kind;
  std::vector<int> targets; // {q} or {control, target} / {a, b}
  double angle = 0.0;       // rotation kinds only

  static Gate h(int q) { return {GateKind::H, {q}}; }
  static Gate rx(int q, double angle) { return {GateKind::RX, {q}, angle}; }
  static Gate ry(int q, double angle) { return {GateKind::RY, {q}, angle}; }
  static Gate rz(int q, double angle) { return {GateKind::RZ, {q}, angle}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, {control, target}}; }
  static Gate cz(int a, int b) { return {GateKind::CZ, {a, b}}; }
  // exp(-i angle/2 Z(a) Z(b))
  static Gate rzz(int a, int b, double angle) { return {GateKind::RZZ, {a, b}, angle}; }
};

// Local unitary of the gate: 2x2 for single-qubit kinds, 4x4 for two-qubit
// kinds with basis index 2*bit(first target) + bit(second target).
CMatrix gate_unitary(const Gate& gate);

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;

  explicit Circuit(int n) : n_qubits(n) {
    if (n < 1) throw domain_error("Circuit: need at least one qubit");
  }

  // Validates target indices (distinct, in range) and angle finiteness.
  void append(Gate gate);
};

} // namespace drvqa
