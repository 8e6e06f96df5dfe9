// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "drvqa/errors.hpp"

namespace drvqa {

// Strictly increasing noise levels xi_1 < ... < xi_n, all in [0, 1].
class NoiseGrid {
public:
  explicit NoiseGrid(std::vector<double> levels);

  // n equally spaced levels from lo to hi inclusive; default experiment grid
  // is uniform(20, 0.0, 0.08).
  static NoiseGrid uniform(int n, double lo, double hi);

  int size() const { return static_cast<int>(levels_.size()); }
  double level(int i) const { return levels_[i]; }
  std::span<const double> levels() const { return levels_; }
  double min_level() const { return levels_.front(); }
  double max_level() const { return levels_.back(); }
  double spacing() const; // mean gap

private:
  std::vector<double> levels_;
};

// Probability weights aligned with a NoiseGrid; entries in [0,1], sum one.
class DiscretePdf {
public:
  explicit DiscretePdf(std::vector<double> weights);

  // Normalizes a nonnegative weight vector to sum one.
  static DiscretePdf normalized(std::vector<double> raw);
  static DiscretePdf uniform(int n);
  static DiscretePdf dirac(int index, int n);

  int size() const { return static_cast<int>(weights_.size()); }
  double weight(int i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }

  double mean_level(const NoiseGrid& grid) const;
  double dot(std::span<const double> values) const;

  bool operator==(const DiscretePdf&) const = default;

private:
  std::vector<double> weights_;
};

// w_i proportional to the Gaussian density at grid level xi_i, normalized.
// The exponent is shifted by its maximum, so the normalization never
// underflows for finite inputs.
DiscretePdf truncated_gaussian_pdf(double mean, double std_dev, const NoiseGrid& grid);

// Inverse-CDF draw of a grid index.
int sample_index(const DiscretePdf& pdf, std::mt19937_64& rng);

} // namespace drvqa
