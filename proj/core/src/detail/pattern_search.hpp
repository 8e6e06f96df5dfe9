// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "drvqa/interval.hpp"

namespace drvqa::detail {

struct PatternSearchResult {
  std::vector<double> x;
  double value = 0.0;
  int evals = 0;
};

// Bounded compass search: per-coordinate +/- probes with step halving once a
// full sweep yields no improvement. Deterministic; never leaves the box.
inline PatternSearchResult pattern_search(
    const std::function<double(std::span<const double>)>& objective,
    std::span<const Interval> bounds, std::vector<double> x0, int max_evals,
    double initial_step_frac = 0.25, double min_step_frac = 1e-5,
    std::vector<std::vector<double>>* probe_log = nullptr) {
  const size_t d = bounds.size();
  PatternSearchResult best;
  for (size_t k = 0; k < d; ++k) x0[k] = bounds[k].clamp(x0[k]);
  best.x = std::move(x0);
  best.value = objective(best.x);
  best.evals = 1;
  if (probe_log) probe_log->push_back(best.x);

  std::vector<double> step(d);
  for (size_t k = 0; k < d; ++k) step[k] = initial_step_frac * bounds[k].width();

  std::vector<double> probe = best.x;
  while (best.evals < max_evals) {
    bool improved = false;
    for (size_t k = 0; k < d && best.evals < max_evals; ++k) {
      for (double sign : {+1.0, -1.0}) {
        const double moved = bounds[k].clamp(best.x[k] + sign * step[k]);
        if (moved == best.x[k]) continue;
        probe = best.x;
        probe[k] = moved;
        const double value = objective(probe);
        ++best.evals;
        if (probe_log) probe_log->push_back(probe);
        if (value < best.value) {
          best.value = value;
          best.x = probe;
          improved = true;
          break;
        }
        if (best.evals >= max_evals) break;
      }
    }
    if (!improved) {
      bool any_step_left = false;
      for (size_t k = 0; k < d; ++k) {
        step[k] *= 0.5;
        if (step[k] >= min_step_frac * bounds[k].width()) any_step_left = true;
      }
      if (!any_step_left) break;
    }
  }
  return best;
}

} // namespace drvqa::detail
