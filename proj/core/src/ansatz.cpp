// SPDX-License-Identifier: Apache-2.0
#include "drvqa/ansatz.hpp"

namespace drvqa {

Circuit qaoa_circuit(const Graph& graph, std::span<const double> gammas,
                     std::span<const double> betas) {
  if (gammas.size() != betas.size()) {
    throw domain_error("qaoa_circuit: gamma and beta arrays must have equal length");
  }
  Circuit circuit(graph.n_vertices());
  for (int q = 0; q < graph.n_vertices(); ++q) circuit.append(Gate::h(q));
  for (size_t layer = 0; layer < gammas.size(); ++layer) {
    // exp(-i gamma H_C) per edge: 1/2 (I - ZZ) -> exp(+i gamma ZZ / 2) = RZZ(-gamma)
    for (auto [u, v] : graph.edges()) {
      circuit.append(Gate::rzz(u, v, -gammas[layer]));
    }
    for (int q = 0; q < graph.n_vertices(); ++q) {
      circuit.append(Gate::rx(q, 2.0 * betas[layer]));
    }
  }
  return circuit;
}

int hea_parameter_count(int n, int layers) {
  if (n < 1 || layers < 1) throw domain_error("hea_parameter_count: invalid shape");
  return n * layers;
}

Circuit hea_circuit(int n, int layers, std::span<const double> theta) {
  if (static_cast<int>(theta.size()) != hea_parameter_count(n, layers)) {
    throw domain_error("hea_circuit: parameter count must equal n * layers");
  }
  Circuit circuit(n);
  for (int q = 0; q < n; ++q) circuit.append(Gate::ry(q, theta[q]));
  for (int layer = 1; layer < layers; ++layer) {
    for (int q = 0; q + 1 < n; ++q) circuit.append(Gate::cnot(q, q + 1));
    for (int q = 0; q < n; ++q) circuit.append(Gate::ry(q, theta[layer * n + q]));
  }
  return circuit;
}

} // namespace drvqa
