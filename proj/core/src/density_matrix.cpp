// SPDX-License-Identifier: Apache-2.0
#include "drvqa/density_matrix.hpp"

#include <cmath>

namespace drvqa {

namespace {

Eigen::Index dim_for(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) {
    throw domain_error("DensityMatrix: qubit count out of range");
  }
  return Eigen::Index{1} << n_qubits;
}

} // namespace

DensityMatrix DensityMatrix::zero_state(int n_qubits) {
  const Eigen::Index dim = dim_for(n_qubits);
  CMatrix data = CMatrix::Zero(dim, dim);
  data(0, 0) = Complex(1.0, 0.0);
  return DensityMatrix(n_qubits, std::move(data));
}

DensityMatrix DensityMatrix::from_pure(const CVector& amplitudes) {
  const Eigen::Index dim = amplitudes.size();
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) {
    throw domain_error("DensityMatrix::from_pure: length is not a power of two");
  }
  if (std::abs(amplitudes.squaredNorm() - 1.0) > 1e-9) {
    throw domain_error("DensityMatrix::from_pure: amplitudes not normalized");
  }
  return DensityMatrix(n, amplitudes * amplitudes.adjoint());
}

DensityMatrix DensityMatrix::from_matrix(int n_qubits, CMatrix data) {
  const Eigen::Index dim = dim_for(n_qubits);
  if (data.rows() != dim || data.cols() != dim) {
    throw domain_error("DensityMatrix::from_matrix: dimension mismatch");
  }
  DensityMatrix rho(n_qubits, std::move(data));
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > kTraceTol) {
    throw domain_error("DensityMatrix::from_matrix: trace differs from one");
  }
  if (rho.max_hermiticity_violation() > kHermitianTol) {
    throw domain_error("DensityMatrix::from_matrix: not Hermitian");
  }
  return rho;
}

double DensityMatrix::max_hermiticity_violation() const {
  return (data_ - data_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  const CMatrix sym = 0.5 * (data_ + data_.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

void DensityMatrix::validate() const {
  if (std::abs(trace() - Complex(1.0, 0.0)) > kTraceTol) {
    throw domain_error("DensityMatrix: trace invariant violated");
  }
  if (max_hermiticity_violation() > kHermitianTol) {
    throw domain_error("DensityMatrix: Hermiticity invariant violated");
  }
  if (min_eigenvalue() < kPsdTol) {
    throw domain_error("DensityMatrix: positivity invariant violated");
  }
}

} // namespace drvqa
