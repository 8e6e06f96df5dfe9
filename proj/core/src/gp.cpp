// SPDX-License-Identifier: Apache-2.0
#include "drvqa/gp.hpp"

#include <cmath>
#include <numbers>

namespace drvqa {

InputScaler::InputScaler(std::vector<Interval> theta_bounds, Interval xi_range)
    : theta_bounds_(std::move(theta_bounds)), xi_range_(xi_range) {
  for (const Interval& b : theta_bounds_) b.validate();
  xi_range_.validate();
}

Eigen::VectorXd InputScaler::normalize(std::span<const double> theta, double xi) const {
  if (theta.size() != theta_bounds_.size()) {
    throw domain_error("InputScaler: theta dimension mismatch");
  }
  Eigen::VectorXd x(dim());
  for (size_t k = 0; k < theta_bounds_.size(); ++k) {
    x(static_cast<Eigen::Index>(k)) = (theta[k] - theta_bounds_[k].lo) / theta_bounds_[k].width();
  }
  x(dim() - 1) = (xi - xi_range_.lo) / xi_range_.width();
  return x;
}

double rbf_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& x2, double lengthscale) {
  if (x.size() != x2.size()) throw domain_error("rbf_kernel: dimension mismatch");
  if (!(lengthscale > 0.0)) throw domain_error("rbf_kernel: lengthscale must be positive");
  return std::exp(-(x - x2).squaredNorm() / (2.0 * lengthscale * lengthscale));
}

namespace {

struct Factorization {
  Eigen::MatrixXd chol_l;
  Eigen::VectorXd alpha;
  double jitter = 0.0;
  double lml = 0.0;
};

// Cholesky of K + eps^2 I with escalating jitter; throws past the cap.
Factorization factorize(const Eigen::MatrixXd& sq_dist, const Eigen::VectorXd& y, double l,
                        double eps) {
  const Eigen::Index n = y.size();
  Eigen::MatrixXd k = (-sq_dist / (2.0 * l * l)).array().exp();
  k.diagonal().array() += eps * eps;
  const double mean_diag = k.trace() / static_cast<double>(n);

  double jitter = 0.0;
  double next = 1e-10 * mean_diag;
  while (true) {
    Eigen::MatrixXd attempt = k;
    attempt.diagonal().array() += jitter;
    Eigen::LLT<Eigen::MatrixXd> llt(attempt);
    if (llt.info() == Eigen::Success) {
      Factorization f;
      f.chol_l = llt.matrixL();
      f.alpha = llt.solve(y);
      f.jitter = jitter;
      f.lml = -0.5 * y.dot(f.alpha) -
              f.chol_l.diagonal().array().log().sum() -
              0.5 * static_cast<double>(n) * std::log(2.0 * std::numbers::pi);
      return f;
    }
    if (next > 1e-6 * mean_diag) {
      throw numerical_error(
          "GpModel: kernel matrix stayed singular after jitter escalation (n=" +
          std::to_string(n) + ", l=" + std::to_string(l) + ", eps=" + std::to_string(eps) + ")");
    }
    jitter = next;
    next *= 2.0;
  }
}

std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (std::log(hi) - std::log(lo)) / (count - 1);
  for (int i = 0; i < count; ++i) out[i] = std::exp(std::log(lo) + step * i);
  return out;
}

} // namespace

GpModel GpModel::fit(const std::vector<Sample>& samples, const InputScaler& scaler,
                     const GpConfig& config) {
  const int n = static_cast<int>(samples.size());
  if (n < 2) throw domain_error("GpModel::fit: need at least two samples");

  GpModel model(scaler);
  model.x_.resize(n, scaler.dim());
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    model.x_.row(i) = scaler.normalize(samples[i].theta, samples[i].xi).transpose();
    if (!std::isfinite(samples[i].value)) {
      throw domain_error("GpModel::fit: sample values must be finite");
    }
    y(i) = samples[i].value;
  }

  model.y_mean_ = y.mean();
  const double variance = (y.array() - model.y_mean_).square().sum() / n;
  model.y_scale_ = variance > 1e-24 ? std::sqrt(variance) : 1.0;
  model.y_std_ = (y.array() - model.y_mean_) / model.y_scale_;

  Eigen::MatrixXd sq_dist(n, n);
  for (int i = 0; i < n; ++i) {
    sq_dist(i, i) = 0.0;
    for (int j = 0; j < i; ++j) {
      const double d = (model.x_.row(i) - model.x_.row(j)).squaredNorm();
      sq_dist(i, j) = d;
      sq_dist(j, i) = d;
    }
  }

  if (config.policy == GpConfig::Policy::Fixed) {
    model.lengthscale_ = config.fixed_lengthscale;
    model.noise_ = std::max(config.fixed_noise, config.noise_floor);
    Factorization f = factorize(sq_dist, model.y_std_, model.lengthscale_, model.noise_);
    model.chol_l_ = std::move(f.chol_l);
    model.alpha_ = std::move(f.alpha);
    model.jitter_ = f.jitter;
    model.lml_ = f.lml;
    return model;
  }

  const auto lengthscales =
      log_grid(config.lengthscale_min, config.lengthscale_max, config.lengthscale_grid_size);
  const auto noises = log_grid(config.noise_min, config.noise_max, config.noise_grid_size);
  bool have_best = false;
  for (double l : lengthscales) {
    for (double eps_raw : noises) {
      const double eps = std::max(eps_raw, config.noise_floor);
      Factorization f;
      try {
        f = factorize(sq_dist, model.y_std_, l, eps);
      } catch (const numerical_error&) {
        continue; // try the rest of the grid
      }
      if (!have_best || f.lml > model.lml_) {
        have_best = true;
        model.lengthscale_ = l;
        model.noise_ = eps;
        model.chol_l_ = std::move(f.chol_l);
        model.alpha_ = std::move(f.alpha);
        model.jitter_ = f.jitter;
        model.lml_ = f.lml;
      }
    }
  }
  if (!have_best) {
    throw numerical_error("GpModel::fit: every hyperparameter candidate failed to factorize");
  }
  return model;
}

GpModel::Prediction GpModel::predict_normalized(const Eigen::VectorXd& x_star) const {
  const Eigen::Index n = x_.rows();
  Eigen::VectorXd k_star(n);
  const double inv = -1.0 / (2.0 * lengthscale_ * lengthscale_);
  for (Eigen::Index i = 0; i < n; ++i) {
    k_star(i) = std::exp(inv * (x_.row(i).transpose() - x_star).squaredNorm());
  }
  const double mu_std = k_star.dot(alpha_);
  const Eigen::VectorXd v = chol_l_.triangularView<Eigen::Lower>().solve(k_star);
  const double var_std = std::max(1.0 - v.squaredNorm(), 0.0);
  Prediction p;
  p.mean = y_mean_ + y_scale_ * mu_std;
  p.stddev = y_scale_ * std::sqrt(var_std);
  return p;
}

GpModel::Prediction GpModel::posterior(std::span<const double> theta, double xi) const {
  return predict_normalized(scaler_.normalize(theta, xi));
}

void GpModel::posterior_row(std::span<const double> theta, const NoiseGrid& grid,
                            std::span<double> mean_out, std::span<double> stddev_out) const {
  const int m = grid.size();
  if (static_cast<int>(mean_out.size()) != m || static_cast<int>(stddev_out.size()) != m) {
    throw domain_error("GpModel::posterior_row: output size mismatch");
  }
  const Eigen::Index n = x_.rows();
  Eigen::MatrixXd k_star(n, m);
  const double inv = -1.0 / (2.0 * lengthscale_ * lengthscale_);
  for (int j = 0; j < m; ++j) {
    const Eigen::VectorXd x_star = scaler_.normalize(theta, grid.level(j));
    for (Eigen::Index i = 0; i < n; ++i) {
      k_star(i, j) = std::exp(inv * (x_.row(i).transpose() - x_star).squaredNorm());
    }
  }
  const Eigen::VectorXd mu_std = k_star.transpose() * alpha_;
  const Eigen::MatrixXd v = chol_l_.triangularView<Eigen::Lower>().solve(k_star);
  for (int j = 0; j < m; ++j) {
    mean_out[j] = y_mean_ + y_scale_ * mu_std(j);
    const double var_std = std::max(1.0 - v.col(j).squaredNorm(), 0.0);
    stddev_out[j] = y_scale_ * std::sqrt(var_std);
  }
}

double GpModel::factorization_residual() const {
  const Eigen::Index n = x_.rows();
  Eigen::MatrixXd k(n, n);
  const double inv = -1.0 / (2.0 * lengthscale_ * lengthscale_);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double val = std::exp(inv * (x_.row(i) - x_.row(j)).squaredNorm());
      k(i, j) = val;
      k(j, i) = val;
    }
  }
  k.diagonal().array() += noise_ * noise_ + jitter_;
  const Eigen::MatrixXd recon = chol_l_ * chol_l_.transpose();
  return (recon - k).norm() / k.norm();
}

double lcb(const GpModel& model, std::span<const double> theta, double xi, double beta) {
  if (!(beta >= 0.0)) throw domain_error("lcb: beta must be nonnegative");
  const GpModel::Prediction p = model.posterior(theta, xi);
  return p.mean - beta * p.stddev;
}

double ei_value(double mean, double stddev, double best_value, bool standard_form) {
  if (!std::isfinite(best_value)) throw domain_error("ei: best value must be finite");
  if (stddev <= 0.0 && standard_form) return 0.0;
  const double z = stddev > 0.0 ? (best_value - mean) / stddev : 0.0;
  const double cdf = 0.5 * std::erfc(-z / std::numbers::sqrt2);
  const double pdf = std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
  return cdf * (best_value - mean) + pdf * stddev;
}

double ei(const GpModel& model, std::span<const double> theta, double xi, double best_value,
          bool standard_form) {
  const GpModel::Prediction p = model.posterior(theta, xi);
  return ei_value(p.mean, p.stddev, best_value, standard_form);
}

} // namespace drvqa
