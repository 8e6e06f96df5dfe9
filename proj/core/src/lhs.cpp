// SPDX-License-Identifier: Apache-2.0
#include "drvqa/lhs.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace drvqa {

std::vector<std::vector<double>> latin_hypercube(int count, std::span<const Interval> bounds,
                                                 std::uint64_t seed) {
  if (count < 1) throw domain_error("latin_hypercube: count must be positive");
  for (const Interval& b : bounds) b.validate();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<std::vector<double>> points(count, std::vector<double>(bounds.size()));
  std::vector<int> strata(count);
  for (size_t k = 0; k < bounds.size(); ++k) {
    std::iota(strata.begin(), strata.end(), 0);
    std::shuffle(strata.begin(), strata.end(), rng);
    for (int i = 0; i < count; ++i) {
      const double cell = (strata[i] + unit(rng)) / count;
      points[i][k] = bounds[k].lo + cell * bounds[k].width();
    }
  }
  return points;
}

} // namespace drvqa
