// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drvqa/density_matrix.hpp"

namespace drvqa {

// One weighted Pauli string; ops[q] in {'I','X','Y','Z'} addresses qubit q.
struct PauliTerm {
  double coefficient = 0.0;
  std::string ops;
};

class PauliHamiltonian {
public:
  PauliHamiltonian(int n_qubits, std::vector<PauliTerm> terms);

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }

  // Dense 2^n x 2^n matrix; capped at 12 qubits (resource_error above).
  CMatrix to_matrix() const;

  // Bitmask form used by the expectation kernel.
  struct TermMasks {
    double coefficient;
    std::uint64_t x_or_y; // flip mask
    std::uint64_t y_or_z; // phase parity mask
    int n_y;              // i^n_y prefactor
  };
  const std::vector<TermMasks>& masks() const { return masks_; }

private:
  int n_qubits_;
  std::vector<PauliTerm> terms_;
  std::vector<TermMasks> masks_;
};

} // namespace drvqa
