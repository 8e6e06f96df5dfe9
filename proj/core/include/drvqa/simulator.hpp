// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "drvqa/circuit.hpp"
#include "drvqa/kraus.hpp"
#include "drvqa/pauli.hpp"

namespace drvqa {

struct SimulatorOptions {
  int max_qubits = 10;
};

// rho -> U rho U^dagger with the gate's unitary embedded on its targets.
DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& gate);

// rho -> sum_i (E_i on qubit) rho (E_i^dagger on qubit); single-qubit channels only.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& channel, int qubit);

// Starts from |0...0><0...0| and applies each gate followed by
// damping_channel(p, p) on every qubit the gate touches.
DensityMatrix run_noisy_circuit(const Circuit& circuit, double noise_level,
                                const SimulatorOptions& options = {});

// Tr[rho H]; throws numerical_error if the imaginary residue exceeds 1e-6.
double expectation(const DensityMatrix& rho, const PauliHamiltonian& observable);

} // namespace drvqa
