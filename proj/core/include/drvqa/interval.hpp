// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>

#include "drvqa/errors.hpp"

namespace drvqa {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double width() const { return hi - lo; }
  double clamp(double x) const { return std::min(hi, std::max(lo, x)); }
  bool contains(double x, double slack = 1e-9) const {
    return x >= lo - slack && x <= hi + slack;
  }
  void validate() const {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
      throw domain_error("Interval: bounds must be finite with lo < hi");
    }
  }
};

} // namespace drvqa
