// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "drvqa/interval.hpp"

namespace drvqa {

// Latin hypercube design: per dimension, the samples occupy distinct
// equal-width strata with uniform jitter inside each stratum and an
// independent stratum permutation. Deterministic for a given seed.
std::vector<std::vector<double>> latin_hypercube(int count, std::span<const Interval> bounds,
                                                 std::uint64_t seed);

} // namespace drvqa
