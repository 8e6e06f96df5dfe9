// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "drvqa/density_matrix.hpp"

namespace drvqa {

// Completely positive trace-preserving map rho -> sum_i E_i rho E_i^dagger.
class KrausChannel {
public:
  static constexpr double kCompletenessTol = 1e-12;

  // Validates matching square dimensions and sum_i E_i^dagger E_i = I.
  static KrausChannel from_operators(std::vector<CMatrix> operators);

  const std::vector<CMatrix>& operators() const { return operators_; }
  Eigen::Index dim() const { return operators_.front().rows(); }

  // Max entrywise deviation of sum_i E_i^dagger E_i from the identity.
  double completeness_defect() const;

private:
  explicit KrausChannel(std::vector<CMatrix> ops) : operators_(std::move(ops)) {}
  std::vector<CMatrix> operators_;
};

// Combined amplitude/phase damping channel on one qubit:
//   E0 = diag(1, sqrt(1-p_ad) sqrt(1-p_pd))
//   E1 = sqrt(p_ad) |0><1|
//   E2 = sqrt(1-p_ad) sqrt(p_pd) |1><1|
KrausChannel damping_channel(double p_ad, double p_pd);

} // namespace drvqa
