// SPDX-License-Identifier: Apache-2.0
#include "drvqa/oracles.hpp"

#include <Eigen/Eigenvalues>

namespace drvqa {

int brute_force_maxcut(const Graph& graph) {
  const int n = graph.n_vertices();
  if (n > 24) throw resource_error("brute_force_maxcut: capped at 24 vertices");
  const std::uint32_t half = std::uint32_t{1} << (n - 1); // vertex n-1 fixed on one side
  int best = 0;
  for (std::uint32_t assign = 0; assign < half; ++assign) {
    int cut = 0;
    for (auto [u, v] : graph.edges()) {
      cut += static_cast<int>(((assign >> u) ^ (assign >> v)) & 1u);
    }
    best = std::max(best, cut);
  }
  return best;
}

double exact_ground_energy(const PauliHamiltonian& hamiltonian) {
  if (hamiltonian.n_qubits() > 12) {
    throw resource_error("exact_ground_energy: capped at 12 qubits");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hamiltonian.to_matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

} // namespace drvqa
