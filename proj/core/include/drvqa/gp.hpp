// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "drvqa/interval.hpp"
#include "drvqa/noise_grid.hpp"

namespace drvqa {

// One observation of the objective at a joint input (theta, xi).
struct Sample {
  std::vector<double> theta;
  double xi = 0.0;
  double value = 0.0;
};

struct GpConfig {
  enum class Policy { GridSearch, Fixed };
  Policy policy = Policy::GridSearch;

  // Fixed-policy hyperparameters.
  double fixed_lengthscale = 0.2;
  double fixed_noise = 1e-3;

  // Log-grid searched by maximum log-marginal likelihood.
  int lengthscale_grid_size = 16;
  double lengthscale_min = 0.05;
  double lengthscale_max = 1.0;
  int noise_grid_size = 8;
  double noise_min = 1e-4;
  double noise_max = 1e-1;

  double noise_floor = 1e-6;
};

// Affine map of (theta, xi) onto the unit cube, so one shared lengthscale
// acts on commensurate coordinates.
class InputScaler {
public:
  InputScaler(std::vector<Interval> theta_bounds, Interval xi_range);

  int dim() const { return static_cast<int>(theta_bounds_.size()) + 1; }
  Eigen::VectorXd normalize(std::span<const double> theta, double xi) const;

private:
  std::vector<Interval> theta_bounds_;
  Interval xi_range_;
};

// exp(-||x - x2||^2 / (2 l^2))
double rbf_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& x2, double lengthscale);

// Zero-mean unit-signal GP with RBF kernel on normalized inputs and
// mean/std-standardized targets (both undone on prediction).
class GpModel {
public:
  struct Prediction {
    double mean = 0.0;
    double stddev = 0.0;
  };

  static GpModel fit(const std::vector<Sample>& samples, const InputScaler& scaler,
                     const GpConfig& config = {});

  Prediction posterior(std::span<const double> theta, double xi) const;

  // Posterior at one theta across every grid level.
  void posterior_row(std::span<const double> theta, const NoiseGrid& grid,
                     std::span<double> mean_out, std::span<double> stddev_out) const;

  int sample_count() const { return static_cast<int>(x_.rows()); }
  double lengthscale() const { return lengthscale_; }
  double noise_stddev() const { return noise_; }
  double log_marginal_likelihood() const { return lml_; }
  double target_mean() const { return y_mean_; }
  double target_scale() const { return y_scale_; }

  // Relative reconstruction error of the stored factorization against
  // K + (eps^2 + jitter) I; diagnostic for tests.
  double factorization_residual() const;

private:
  GpModel(InputScaler scaler) : scaler_(std::move(scaler)) {}

  Prediction predict_normalized(const Eigen::VectorXd& x_star) const;

  InputScaler scaler_;
  Eigen::MatrixXd x_;     // rows are normalized joint inputs
  Eigen::VectorXd y_std_; // standardized targets
  double y_mean_ = 0.0;
  double y_scale_ = 1.0;
  double lengthscale_ = 0.0;
  double noise_ = 0.0;
  double jitter_ = 0.0;
  Eigen::MatrixXd chol_l_;
  Eigen::VectorXd alpha_;
  double lml_ = 0.0;
};

// mu(x) - beta * sigma(x)
double lcb(const GpModel& model, std::span<const double> theta, double xi, double beta);

// Expected improvement under minimization with best observed value
// best_value. The sigma = 0 branch keeps z = 0, so the returned value can be
// negative when mu exceeds best_value; standard_form zeroes it instead.
double ei(const GpModel& model, std::span<const double> theta, double xi, double best_value,
          bool standard_form = false);

// EI evaluated from an explicit (mean, stddev) pair.
double ei_value(double mean, double stddev, double best_value, bool standard_form = false);

} // namespace drvqa
