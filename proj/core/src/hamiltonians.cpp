// SPDX-License-Identifier: Apache-2.0
#include "drvqa/hamiltonians.hpp"

namespace drvqa {

PauliHamiltonian maxcut_hamiltonian(const Graph& graph) {
  const int n = graph.n_vertices();
  std::vector<PauliTerm> terms;
  terms.reserve(2 * graph.edges().size());
  for (auto [u, v] : graph.edges()) {
    terms.push_back({0.5, std::string(n, 'I')});
    std::string zz(n, 'I');
    zz[u] = 'Z';
    zz[v] = 'Z';
    terms.push_back({-0.5, std::move(zz)});
  }
  return PauliHamiltonian(n, std::move(terms));
}

PauliHamiltonian heisenberg_hamiltonian(int n, double coupling, double field, bool periodic) {
  if (n < 2) throw domain_error("heisenberg_hamiltonian: need at least two spins");
  std::vector<PauliTerm> terms;
  const int bonds = periodic ? n : n - 1;
  for (int i = 0; i < bonds; ++i) {
    const int j = (i + 1) % n;
    for (char p : {'X', 'Y', 'Z'}) {
      std::string ops(n, 'I');
      ops[i] = p;
      ops[j] = p;
      terms.push_back({coupling, std::move(ops)});
    }
  }
  for (int i = 0; i < n; ++i) {
    std::string ops(n, 'I');
    ops[i] = 'Z';
    terms.push_back({field, std::move(ops)});
  }
  return PauliHamiltonian(n, std::move(terms));
}

} // namespace drvqa
