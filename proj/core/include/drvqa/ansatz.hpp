// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "drvqa/circuit.hpp"
#include "drvqa/graph.hpp"

namespace drvqa {

// H on all qubits, then per layer k: the phase separator exp(-i gamma_k H_C)
// as one RZZ per edge (constant terms dropped), then the mixer RX(2 beta_k)
// on every qubit. p = 0 yields the bare |+...+> preparation circuit.
Circuit qaoa_circuit(const Graph& graph, std::span<const double> gammas,
                     std::span<const double> betas);

// Hardware-efficient ansatz: an RY layer, then (layers - 1) repetitions of a
// linear CNOT chain followed by an RY layer. Parameter count is n * layers.
Circuit hea_circuit(int n, int layers, std::span<const double> theta);

int hea_parameter_count(int n, int layers);

} // namespace drvqa
