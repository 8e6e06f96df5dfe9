// SPDX-License-Identifier: Apache-2.0
#include "drvqa/kraus.hpp"

#include <cmath>

namespace drvqa {

KrausChannel KrausChannel::from_operators(std::vector<CMatrix> operators) {
  if (operators.empty()) {
    throw domain_error("KrausChannel: need at least one operator");
  }
  const Eigen::Index dim = operators.front().rows();
  for (const CMatrix& op : operators) {
    if (op.rows() != dim || op.cols() != dim) {
      throw domain_error("KrausChannel: operators must share one square dimension");
    }
  }
  KrausChannel channel(std::move(operators));
  if (channel.completeness_defect() > kCompletenessTol) {
    throw domain_error("KrausChannel: completeness sum E_i^dagger E_i != I");
  }
  return channel;
}

double KrausChannel::completeness_defect() const {
  const Eigen::Index dim = operators_.front().rows();
  CMatrix sum = CMatrix::Zero(dim, dim);
  for (const CMatrix& op : operators_) {
    sum += op.adjoint() * op;
  }
  return (sum - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

KrausChannel damping_channel(double p_ad, double p_pd) {
  if (!(p_ad >= 0.0 && p_ad <= 1.0) || !(p_pd >= 0.0 && p_pd <= 1.0)) {
    throw domain_error("damping_channel: probabilities must lie in [0, 1]");
  }
  const double keep = std::sqrt(1.0 - p_ad) * std::sqrt(1.0 - p_pd);

  CMatrix e0 = CMatrix::Zero(2, 2);
  e0(0, 0) = 1.0;
  e0(1, 1) = keep;

  CMatrix e1 = CMatrix::Zero(2, 2);
  e1(0, 1) = std::sqrt(p_ad);

  CMatrix e2 = CMatrix::Zero(2, 2);
  e2(1, 1) = std::sqrt(1.0 - p_ad) * std::sqrt(p_pd);

  return KrausChannel::from_operators({std::move(e0), std::move(e1), std::move(e2)});
}

} // namespace drvqa
