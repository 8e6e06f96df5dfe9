// SPDX-License-Identifier: Apache-2.0
//
// Brute-force reference implementations used only by tests. Everything here
// builds full 2^n x 2^n operators by Kronecker products and multiplies them
// out, deliberately avoiding the library's in-place kernels.
#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "drvqa/circuit.hpp"
#include "drvqa/graph.hpp"
#include "drvqa/pauli.hpp"

namespace drvqa::testing {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Cx = std::complex<double>;

inline CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

// Embeds a single-qubit operator on qubit q (qubit 0 = least significant bit).
inline CMat embed_1q(const CMat& op, int q, int n) {
  CMat out = CMat::Identity(1, 1);
  for (int k = n - 1; k >= 0; --k) {
    out = kron(out, k == q ? op : CMat::Identity(2, 2));
  }
  return out;
}

// Embeds a two-qubit operator with basis index 2*bit(qa) + bit(qb).
inline CMat embed_2q(const CMat& op, int qa, int qb, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  CMat out = CMat::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const int a = static_cast<int>((col >> qa) & 1);
    const int b = static_cast<int>((col >> qb) & 1);
    for (int ra = 0; ra < 2; ++ra) {
      for (int rb = 0; rb < 2; ++rb) {
        const Cx amp = op(2 * ra + rb, 2 * a + b);
        if (amp == Cx(0.0, 0.0)) continue;
        Eigen::Index row = col;
        row = (row & ~(Eigen::Index{1} << qa)) | (Eigen::Index{ra} << qa);
        row = (row & ~(Eigen::Index{1} << qb)) | (Eigen::Index{rb} << qb);
        out(row, col) += amp;
      }
    }
  }
  return out;
}

inline CMat full_gate_matrix(const Gate& gate, int n) {
  const CMat u = gate_unitary(gate);
  if (gate_arity(gate.kind) == 1) return embed_1q(u, gate.targets[0], n);
  return embed_2q(u, gate.targets[0], gate.targets[1], n);
}

// Pure statevector evolution of the noiseless circuit.
inline CVec statevector_run(const Circuit& circuit) {
  const Eigen::Index dim = Eigen::Index{1} << circuit.n_qubits;
  CVec psi = CVec::Zero(dim);
  psi(0) = 1.0;
  for (const Gate& g : circuit.gates) {
    psi = full_gate_matrix(g, circuit.n_qubits) * psi;
  }
  return psi;
}

inline double statevector_expectation(const Circuit& circuit, const PauliHamiltonian& h) {
  const CVec psi = statevector_run(circuit);
  const Cx value = psi.adjoint() * h.to_matrix() * psi;
  return value.real();
}

// Sequential full-matrix Kraus application: rho -> sum_i E_i rho E_i^dagger.
inline CMat kraus_apply_full(const CMat& rho, const std::vector<CMat>& ops, int q, int n) {
  CMat out = CMat::Zero(rho.rows(), rho.cols());
  for (const CMat& e : ops) {
    const CMat full = embed_1q(e, q, n);
    out += full * rho * full.adjoint();
  }
  return out;
}

// Density-matrix circuit simulation with per-gate damping, entirely via
// full-matrix products.
inline CMat noisy_run_full(const Circuit& circuit, const std::vector<CMat>& damping_ops) {
  const Eigen::Index dim = Eigen::Index{1} << circuit.n_qubits;
  CMat rho = CMat::Zero(dim, dim);
  rho(0, 0) = 1.0;
  for (const Gate& g : circuit.gates) {
    const CMat u = full_gate_matrix(g, circuit.n_qubits);
    rho = u * rho * u.adjoint();
    for (int q : g.targets) {
      rho = kraus_apply_full(rho, damping_ops, q, circuit.n_qubits);
    }
  }
  return rho;
}

// Random mixed state rho = G G^dagger / tr(G G^dagger).
inline CMat random_density(int n, std::mt19937_64& rng) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMat g(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) g(r, c) = Cx(gauss(rng), gauss(rng));
  }
  CMat rho = g * g.adjoint();
  rho /= rho.trace();
  return rho;
}

inline Circuit random_circuit(int n, int n_gates, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick_kind(0, 6);
  std::uniform_int_distribution<int> pick_q(0, n - 1);
  std::uniform_real_distribution<double> pick_angle(-3.2, 3.2);
  Circuit c(n);
  for (int i = 0; i < n_gates; ++i) {
    const auto kind = static_cast<GateKind>(pick_kind(rng));
    int a = pick_q(rng);
    if (gate_arity(kind) == 1) {
      c.append({kind, {a}, pick_angle(rng)});
    } else {
      int b = pick_q(rng);
      while (b == a) b = pick_q(rng);
      c.append({kind, {a, b}, pick_angle(rng)});
    }
  }
  return c;
}

inline Graph random_graph(int n, double edge_prob, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (unit(rng) < edge_prob) edges.emplace_back(u, v);
    }
  }
  if (edges.empty()) edges.emplace_back(0, 1 % n);
  return Graph(n, std::move(edges));
}

} // namespace drvqa::testing
