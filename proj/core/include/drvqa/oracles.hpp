// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "drvqa/graph.hpp"
#include "drvqa/pauli.hpp"

namespace drvqa {

// Exact maximum cut by exhaustive enumeration over 2^(n-1) bipartitions (n <= 24).
int brute_force_maxcut(const Graph& graph);

// Smallest eigenvalue of the dense Hamiltonian matrix (qubit count <= 12).
double exact_ground_energy(const PauliHamiltonian& hamiltonian);

} // namespace drvqa
