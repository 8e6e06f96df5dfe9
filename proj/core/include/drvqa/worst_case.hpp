// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "drvqa/mmd.hpp"

namespace drvqa {

struct WorstCaseOptions {
  // Exact KKT active-set solve over simplex faces; falls back to projected
  // gradient ascent when it cannot certify optimality.
  bool use_active_set = true;
  // Projected-gradient fallback: fixed step 1/||values|| with alternating
  // simplex / kernel-metric ball projections after each step.
  int pga_iterations = 2000;
  int projection_rounds = 500;
};

// Maximizes <w', values> over the probability simplex intersected with the
// MMD ball, returning a feasible maximizer (both constraints within 1e-9).
// Degenerate cases return the ball center: zero radius, or constant values.
DiscretePdf worst_case_distribution(const std::vector<double>& values, const MmdBall& ball,
                                    const WorstCaseOptions& options = {});

} // namespace drvqa
