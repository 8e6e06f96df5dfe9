// SPDX-License-Identifier: Apache-2.0
#include "drvqa/mmd.hpp"

#include <cmath>

namespace drvqa {

Eigen::MatrixXd mmd_kernel_matrix(const NoiseGrid& grid, double lengthscale) {
  if (!(lengthscale > 0.0)) {
    throw domain_error("mmd_kernel_matrix: lengthscale must be positive");
  }
  const int n = grid.size();
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double d = grid.level(i) - grid.level(j);
      const double v = std::exp(-d * d / (2.0 * lengthscale * lengthscale));
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

double mmd_distance(const DiscretePdf& w, const DiscretePdf& w2, const Eigen::MatrixXd& kernel) {
  if (w.size() != w2.size() || kernel.rows() != w.size() || kernel.cols() != w.size()) {
    throw domain_error("mmd_distance: dimension mismatch");
  }
  Eigen::VectorXd diff(w.size());
  for (int i = 0; i < w.size(); ++i) diff(i) = w.weight(i) - w2.weight(i);
  const double quad = diff.dot(kernel * diff);
  if (quad < -1e-12) {
    throw numerical_error("mmd_distance: kernel matrix is not PSD on this difference");
  }
  return std::sqrt(std::max(quad, 0.0));
}

MmdBall::MmdBall(DiscretePdf center, double radius, Eigen::MatrixXd kernel)
    : center_(std::move(center)), radius_(radius), kernel_(std::move(kernel)) {
  const int n = center_.size();
  if (kernel_.rows() != n || kernel_.cols() != n) {
    throw domain_error("MmdBall: kernel dimension mismatch");
  }
  if (!(radius_ >= 0.0) || !std::isfinite(radius_)) {
    throw domain_error("MmdBall: radius must be finite and nonnegative");
  }
  if ((kernel_ - kernel_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw domain_error("MmdBall: kernel matrix must be symmetric");
  }
  const double jitter = 1e-12 * kernel_.trace() / n;
  Eigen::MatrixXd jittered = kernel_;
  jittered.diagonal().array() += jitter;
  Eigen::LLT<Eigen::MatrixXd> llt(jittered);
  if (llt.info() != Eigen::Success) {
    throw domain_error("MmdBall: kernel matrix is not positive semidefinite");
  }
  chol_ = llt.matrixL();
}

} // namespace drvqa
