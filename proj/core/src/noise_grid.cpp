// SPDX-License-Identifier: Apache-2.0
#include "drvqa/noise_grid.hpp"

#include <cmath>
#include <numeric>

namespace drvqa {

NoiseGrid::NoiseGrid(std::vector<double> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw domain_error("NoiseGrid: empty level list");
  for (size_t i = 0; i < levels_.size(); ++i) {
    if (!(levels_[i] >= 0.0 && levels_[i] <= 1.0)) {
      throw domain_error("NoiseGrid: levels must lie in [0, 1]");
    }
    if (i > 0 && !(levels_[i] > levels_[i - 1])) {
      throw domain_error("NoiseGrid: levels must be strictly increasing");
    }
  }
}

NoiseGrid NoiseGrid::uniform(int n, double lo, double hi) {
  if (n < 2) throw domain_error("NoiseGrid::uniform: need at least two levels");
  std::vector<double> levels(n);
  for (int i = 0; i < n; ++i) {
    levels[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  return NoiseGrid(std::move(levels));
}

double NoiseGrid::spacing() const {
  if (levels_.size() < 2) return 0.0;
  return (levels_.back() - levels_.front()) / static_cast<double>(levels_.size() - 1);
}

DiscretePdf::DiscretePdf(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw domain_error("DiscretePdf: empty weight vector");
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw domain_error("DiscretePdf: weights must lie in [0, 1]");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw domain_error("DiscretePdf: weights must sum to one");
  }
}

DiscretePdf DiscretePdf::normalized(std::vector<double> raw) {
  double sum = 0.0;
  for (double w : raw) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw domain_error("DiscretePdf::normalized: weights must be finite and nonnegative");
    }
    sum += w;
  }
  if (sum <= 0.0) throw domain_error("DiscretePdf::normalized: all weights are zero");
  for (double& w : raw) w /= sum;
  return DiscretePdf(std::move(raw));
}

DiscretePdf DiscretePdf::uniform(int n) {
  if (n < 1) throw domain_error("DiscretePdf::uniform: invalid size");
  return DiscretePdf(std::vector<double>(n, 1.0 / n));
}

DiscretePdf DiscretePdf::dirac(int index, int n) {
  if (index < 0 || index >= n) throw domain_error("DiscretePdf::dirac: index out of range");
  std::vector<double> w(n, 0.0);
  w[index] = 1.0;
  return DiscretePdf(std::move(w));
}

double DiscretePdf::mean_level(const NoiseGrid& grid) const {
  if (grid.size() != size()) throw domain_error("DiscretePdf: grid size mismatch");
  double m = 0.0;
  for (int i = 0; i < size(); ++i) m += weights_[i] * grid.level(i);
  return m;
}

double DiscretePdf::dot(std::span<const double> values) const {
  if (values.size() != weights_.size()) throw domain_error("DiscretePdf: value size mismatch");
  double acc = 0.0;
  for (size_t i = 0; i < weights_.size(); ++i) acc += weights_[i] * values[i];
  return acc;
}

DiscretePdf truncated_gaussian_pdf(double mean, double std_dev, const NoiseGrid& grid) {
  if (!(std_dev > 0.0) || !std::isfinite(std_dev) || !std::isfinite(mean)) {
    throw domain_error("truncated_gaussian_pdf: invalid parameters");
  }
  std::vector<double> exponents(grid.size());
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid.size(); ++i) {
    const double z = (grid.level(i) - mean) / std_dev;
    exponents[i] = -0.5 * z * z;
    best = std::max(best, exponents[i]);
  }
  if (!std::isfinite(best)) {
    throw domain_error("truncated_gaussian_pdf: densities underflow to zero");
  }
  std::vector<double> raw(grid.size());
  for (int i = 0; i < grid.size(); ++i) raw[i] = std::exp(exponents[i] - best);
  return DiscretePdf::normalized(std::move(raw));
}

int sample_index(const DiscretePdf& pdf, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  double cdf = 0.0;
  for (int i = 0; i < pdf.size(); ++i) {
    cdf += pdf.weight(i);
    if (u < cdf) return i;
  }
  return pdf.size() - 1;
}

} // namespace drvqa
