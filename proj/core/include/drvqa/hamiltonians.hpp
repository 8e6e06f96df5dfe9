// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "drvqa/graph.hpp"
#include "drvqa/pauli.hpp"

namespace drvqa {

// H_C = sum over edges (i,j) of 1/2 (I - Z_i Z_j); the expectation on a
// computational basis state equals the cut size of that bipartition.
PauliHamiltonian maxcut_hamiltonian(const Graph& graph);

// H = J sum_i (X_i X_{i+1} + Y_i Y_{i+1} + Z_i Z_{i+1}) + B sum_i Z_i,
// open boundary unless periodic is set.
PauliHamiltonian heisenberg_hamiltonian(int n, double coupling, double field,
                                        bool periodic = false);

} // namespace drvqa
