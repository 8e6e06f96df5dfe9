// SPDX-License-Identifier: Apache-2.0
#include "drvqa/pauli.hpp"

#include <cmath>

namespace drvqa {

PauliHamiltonian::PauliHamiltonian(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  if (n_qubits < 1 || n_qubits > 62) {
    throw domain_error("PauliHamiltonian: qubit count out of range");
  }
  masks_.reserve(terms_.size());
  for (const PauliTerm& term : terms_) {
    if (static_cast<int>(term.ops.size()) != n_qubits) {
      throw domain_error("PauliHamiltonian: term length differs from qubit count");
    }
    if (!std::isfinite(term.coefficient)) {
      throw domain_error("PauliHamiltonian: coefficient must be finite");
    }
    TermMasks m{term.coefficient, 0, 0, 0};
    for (int q = 0; q < n_qubits; ++q) {
      const std::uint64_t bit = std::uint64_t{1} << q;
      switch (term.ops[q]) {
        case 'I': break;
        case 'X': m.x_or_y |= bit; break;
        case 'Y': m.x_or_y |= bit; m.y_or_z |= bit; ++m.n_y; break;
        case 'Z': m.y_or_z |= bit; break;
        default:
          throw domain_error("PauliHamiltonian: symbols must be one of I, X, Y, Z");
      }
    }
    masks_.push_back(m);
  }
}

CMatrix PauliHamiltonian::to_matrix() const {
  if (n_qubits_ > 12) {
    throw resource_error("PauliHamiltonian::to_matrix: capped at 12 qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits_;
  CMatrix h = CMatrix::Zero(dim, dim);

  CMatrix sx(2, 2), sy(2, 2), sz(2, 2), id(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  id.setIdentity();

  for (const PauliTerm& term : terms_) {
    CMatrix acc = CMatrix::Identity(1, 1);
    // qubit 0 is the least significant bit, so it is the rightmost kron factor
    for (int q = n_qubits_ - 1; q >= 0; --q) {
      const CMatrix* factor = &id;
      if (term.ops[q] == 'X') factor = &sx;
      else if (term.ops[q] == 'Y') factor = &sy;
      else if (term.ops[q] == 'Z') factor = &sz;
      CMatrix next(acc.rows() * 2, acc.cols() * 2);
      for (Eigen::Index r = 0; r < acc.rows(); ++r) {
        for (Eigen::Index c = 0; c < acc.cols(); ++c) {
          next.block(2 * r, 2 * c, 2, 2) = acc(r, c) * (*factor);
        }
      }
      acc = std::move(next);
    }
    h += term.coefficient * acc;
  }
  return h;
}

} // namespace drvqa
