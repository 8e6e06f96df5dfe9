// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "drvqa/noise_grid.hpp"

namespace drvqa {

// RBF kernel matrix M_ij = exp(-(xi_i - xi_j)^2 / (2 l^2)) over grid levels.
Eigen::MatrixXd mmd_kernel_matrix(const NoiseGrid& grid, double lengthscale);

// sqrt((w - w')^T M (w - w')); throws numerical_error if the quadratic form
// is negative beyond -1e-12.
double mmd_distance(const DiscretePdf& w, const DiscretePdf& w2, const Eigen::MatrixXd& kernel);

// Ambiguity set {rho : D(center, rho) <= radius} under the kernel metric.
class MmdBall {
public:
  MmdBall(DiscretePdf center, double radius, Eigen::MatrixXd kernel);

  const DiscretePdf& center() const { return center_; }
  double radius() const { return radius_; }
  const Eigen::MatrixXd& kernel() const { return kernel_; }
  // Lower Cholesky factor of the jittered kernel matrix.
  const Eigen::MatrixXd& cholesky_factor() const { return chol_; }

  double distance_from_center(const DiscretePdf& w) const {
    return mmd_distance(center_, w, kernel_);
  }
  bool contains(const DiscretePdf& w, double slack = 1e-9) const {
    return distance_from_center(w) <= radius_ + slack;
  }

private:
  DiscretePdf center_;
  double radius_;
  Eigen::MatrixXd kernel_;
  Eigen::MatrixXd chol_;
};

} // namespace drvqa
