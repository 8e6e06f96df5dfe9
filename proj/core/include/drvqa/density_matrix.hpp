// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include <Eigen/Dense>

#include "drvqa/errors.hpp"

namespace drvqa {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

namespace detail {
struct DensityMatrixAccess;
}

// Dense 2^n x 2^n state operator. Valid instances are trace-one, Hermitian
// and positive semidefinite up to the tolerances below.
class DensityMatrix {
public:
  static constexpr double kTraceTol = 1e-10;
  static constexpr double kHermitianTol = 1e-10;
  static constexpr double kPsdTol = -1e-9;

  // |0...0><0...0|
  static DensityMatrix zero_state(int n_qubits);

  // Pure state |psi><psi| from a normalized amplitude vector.
  static DensityMatrix from_pure(const CVector& amplitudes);

  // Validates trace and Hermiticity; throws domain_error on violation.
  static DensityMatrix from_matrix(int n_qubits, CMatrix data);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return data_.rows(); }
  const CMatrix& matrix() const { return data_; }

  Complex trace() const { return data_.trace(); }
  double max_hermiticity_violation() const;

  // Smallest eigenvalue of the Hermitian part (rho + rho^dagger)/2.
  double min_eigenvalue() const;

  // Throws domain_error if any invariant (trace, Hermiticity, PSD) fails.
  void validate() const;

private:
  DensityMatrix(int n_qubits, CMatrix data)
      : n_qubits_(n_qubits), data_(std::move(data)) {}

  int n_qubits_ = 0;
  CMatrix data_;

  friend struct detail::DensityMatrixAccess; // internal kernel access
};

} // namespace drvqa
