// SPDX-License-Identifier: Apache-2.0
#include "drvqa/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "detail/pattern_search.hpp"

namespace drvqa {

namespace {

// splitmix64; decorrelates the per-phase sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace

const char* method_name(Method method) {
  switch (method) {
    case Method::Drbo: return "drbo";
    case Method::BoLcb: return "bo-lcb";
    case Method::BoEi: return "bo-ei";
    case Method::BoStable: return "bo-stable";
  }
  return "?";
}

Method method_from_name(const std::string& name) {
  if (name == "drbo") return Method::Drbo;
  if (name == "bo-lcb") return Method::BoLcb;
  if (name == "bo-ei") return Method::BoEi;
  if (name == "bo-stable") return Method::BoStable;
  throw config_error("unknown method name: " + name);
}

void OptimizerConfig::validate() const {
  if (init_count < 2) throw domain_error("OptimizerConfig: init_count must be at least 2");
  if (max_iterations < 1) throw domain_error("OptimizerConfig: max_iterations must be at least 1");
  if (batch_size < 1) throw domain_error("OptimizerConfig: batch_size must be at least 1");
  if (!(beta >= 0.0)) throw domain_error("OptimizerConfig: beta must be nonnegative");
  if (!(epsilon >= 0.0)) throw domain_error("OptimizerConfig: epsilon must be nonnegative");
}

bool OptimizationTrace::core_equals(const OptimizationTrace& other) const {
  if (initial_thetas != other.initial_thetas || initial_xis != other.initial_xis ||
      initial_values != other.initial_values || theta_star != other.theta_star ||
      iterations.size() != other.iterations.size()) {
    return false;
  }
  for (size_t t = 0; t < iterations.size(); ++t) {
    const IterationRecord& a = iterations[t];
    const IterationRecord& b = other.iterations[t];
    if (a.explored_theta != b.explored_theta || a.xi_batch != b.xi_batch ||
        a.observed_values != b.observed_values || a.selection_value != b.selection_value ||
        a.nominal_value != b.nominal_value || a.incumbent_theta != b.incumbent_theta ||
        a.incumbent_score != b.incumbent_score) {
      return false;
    }
  }
  return true;
}

std::vector<double> outer_minimize(const std::function<double(std::span<const double>)>& surface,
                                   std::span<const Interval> bounds,
                                   const OuterSearchBudget& budget, std::uint64_t seed,
                                   const std::optional<std::vector<double>>& incumbent,
                                   std::vector<std::vector<double>>* probe_log) {
  const size_t d = bounds.size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<std::vector<double>> starts;
  starts.reserve(budget.restarts + 1);
  if (incumbent) starts.push_back(*incumbent);
  for (int r = 0; r < budget.restarts; ++r) {
    std::vector<double> x(d);
    for (size_t k = 0; k < d; ++k) x[k] = bounds[k].lo + unit(rng) * bounds[k].width();
    starts.push_back(std::move(x));
  }

  detail::PatternSearchResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (auto& start : starts) {
    auto res = detail::pattern_search(surface, bounds, std::move(start),
                                      budget.evals_per_restart, 0.25, 1e-5, probe_log);
    if (res.value < best.value) best = std::move(res);
  }
  return best.x;
}

std::vector<double> select_optimal(const GpModel& model,
                                   const std::vector<std::vector<double>>& candidates,
                                   const DiscretePdf& weights, const NoiseGrid& grid,
                                   bool maximize) {
  if (candidates.empty()) throw domain_error("select_optimal: empty candidate set");
  std::vector<double> mu(grid.size()), sigma(grid.size());
  double best_score = 0.0;
  size_t best_idx = 0;
  for (size_t c = 0; c < candidates.size(); ++c) {
    model.posterior_row(candidates[c], grid, mu, sigma);
    const double score = weights.dot(mu);
    const bool better = c == 0 || (maximize ? score > best_score : score < best_score);
    if (better) {
      best_score = score;
      best_idx = c;
    }
  }
  return candidates[best_idx];
}

namespace {

struct AcquisitionContext {
  const GpModel* model;
  const NoiseGrid* grid;
  const DiscretePdf* ref_pdf;
  const MmdBall* ball; // DRBO only
  double beta;
  double best_observed; // BoEi only
  bool paper_ei;
};

// LCB row over the grid for one theta.
void lcb_row(const AcquisitionContext& ctx, std::span<const double> theta,
             std::vector<double>& mu, std::vector<double>& sigma, std::vector<double>& row) {
  ctx.model->posterior_row(theta, *ctx.grid, mu, sigma);
  for (size_t j = 0; j < row.size(); ++j) row[j] = mu[j] - ctx.beta * sigma[j];
}

double acquisition_value(Method method, const AcquisitionContext& ctx,
                         std::span<const double> theta, std::vector<double>& mu,
                         std::vector<double>& sigma, std::vector<double>& row,
                         DiscretePdf* worst_out = nullptr) {
  switch (method) {
    case Method::Drbo: {
      lcb_row(ctx, theta, mu, sigma, row);
      DiscretePdf worst = worst_case_distribution(row, *ctx.ball);
      const double value = worst.dot(row);
      if (worst_out) *worst_out = std::move(worst);
      return value;
    }
    case Method::BoLcb: {
      lcb_row(ctx, theta, mu, sigma, row);
      return ctx.ref_pdf->dot(row);
    }
    case Method::BoEi: {
      ctx.model->posterior_row(theta, *ctx.grid, mu, sigma);
      for (size_t j = 0; j < row.size(); ++j) {
        row[j] = ei_value(mu[j], sigma[j], ctx.best_observed, !ctx.paper_ei);
      }
      return -ctx.ref_pdf->dot(row); // maximize expected improvement
    }
    case Method::BoStable: {
      lcb_row(ctx, theta, mu, sigma, row);
      return *std::max_element(row.begin(), row.end());
    }
  }
  throw domain_error("acquisition_value: unknown method");
}

} // namespace

OptimizerResult run_optimizer(const ObjectiveFunction& objective, const DiscretePdf& ref_pdf,
                              const NoiseGrid& grid, const OptimizerConfig& config) {
  config.validate();
  if (ref_pdf.size() != grid.size()) {
    throw domain_error("run_optimizer: reference pdf size differs from grid");
  }
  if (!objective.eval) throw domain_error("run_optimizer: objective is empty");
  const std::span<const Interval> bounds = objective.bounds;
  const int n_grid = grid.size();

  std::optional<MmdBall> ball;
  if (config.method == Method::Drbo) {
    const double l = config.mmd_lengthscale > 0.0 ? config.mmd_lengthscale : 2.0 * grid.spacing();
    ball.emplace(ref_pdf, config.epsilon, mmd_kernel_matrix(grid, l));
  }

  OptimizerResult result;
  OptimizationTrace& trace = result.trace;

  // Initial design: M Latin-hypercube thetas, one reference-sampled xi each.
  trace.initial_thetas = latin_hypercube(config.init_count, bounds, mix_seed(config.seed, 0x11));
  std::mt19937_64 init_rng(mix_seed(config.seed, 0x22));
  std::vector<Sample> data;
  data.reserve(config.init_count + config.max_iterations * config.batch_size);
  for (const auto& theta : trace.initial_thetas) {
    const double xi = grid.level(sample_index(ref_pdf, init_rng));
    const double value = objective.eval(theta, xi);
    trace.initial_xis.push_back(xi);
    trace.initial_values.push_back(value);
    data.push_back({theta, xi, value});
  }

  const InputScaler scaler({bounds.begin(), bounds.end()},
                           Interval{grid.min_level(), grid.max_level()});

  std::vector<std::vector<double>> explored = trace.initial_thetas;
  std::vector<double> mu(n_grid), sigma(n_grid), row(n_grid);

  for (int t = 1; t <= config.max_iterations; ++t) {
    GpModel model = [&]() -> GpModel {
      try {
        return GpModel::fit(data, scaler, config.gp);
      } catch (const numerical_error& err) {
        throw optimizer_abort(err.what(), trace);
      }
    }();

    double best_observed = data.front().value;
    for (const Sample& s : data) best_observed = std::min(best_observed, s.value);

    AcquisitionContext ctx{&model,      &grid,        &ref_pdf, ball ? &*ball : nullptr,
                           config.beta, best_observed, config.paper_ei};
    auto surface = [&](std::span<const double> theta) {
      return acquisition_value(config.method, ctx, theta, mu, sigma, row);
    };

    // Incumbent for the outer search: best explored theta by observed value.
    size_t best_data_idx = 0;
    for (size_t i = 1; i < data.size(); ++i) {
      if (data[i].value < data[best_data_idx].value) best_data_idx = i;
    }
    const std::vector<double> theta_t =
        outer_minimize(surface, bounds, config.outer, mix_seed(config.seed, 0x1000 + t),
                       data[best_data_idx].theta);

    IterationRecord record;
    record.explored_theta = theta_t;
    record.selection_value =
        acquisition_value(config.method, ctx, theta_t, mu, sigma, row,
                          nullptr);
    if (config.method == Method::Drbo) {
      lcb_row(ctx, theta_t, mu, sigma, row);
      DiscretePdf worst = worst_case_distribution(row, *ball);
      record.worst_case_weights.assign(worst.weights().begin(), worst.weights().end());
    }
    lcb_row(ctx, theta_t, mu, sigma, row);
    record.nominal_value = ref_pdf.dot(row);

    // Batch evaluation: K reference-sampled levels; duplicate levels are
    // simulated once and re-expanded as repeated rows.
    std::mt19937_64 batch_rng(mix_seed(config.seed, 0x2000 + t));
    std::vector<int> indices(config.batch_size);
    for (int k = 0; k < config.batch_size; ++k) indices[k] = sample_index(ref_pdf, batch_rng);
    std::map<int, double> value_by_index;
    for (int idx : indices) {
      if (!value_by_index.count(idx)) {
        value_by_index[idx] = objective.eval(theta_t, grid.level(idx));
      }
    }
    for (int idx : indices) {
      const double xi = grid.level(idx);
      const double value = value_by_index[idx];
      record.xi_batch.push_back(xi);
      record.observed_values.push_back(value);
      data.push_back({theta_t, xi, value});
    }
    explored.push_back(theta_t);

    record.incumbent_theta = select_optimal(model, explored, ref_pdf, grid, config.select_maximize);
    model.posterior_row(record.incumbent_theta, grid, mu, sigma);
    record.incumbent_score = ref_pdf.dot(std::span<const double>(mu));

    trace.iterations.push_back(std::move(record));
  }

  // Final selection: explored thetas plus the posterior-mean minimizer.
  GpModel final_model = GpModel::fit(data, scaler, config.gp);
  const double direction = config.select_maximize ? -1.0 : 1.0;
  auto mean_surface = [&](std::span<const double> theta) {
    final_model.posterior_row(theta, grid, mu, sigma);
    return direction * ref_pdf.dot(std::span<const double>(mu));
  };
  size_t best_data_idx = 0;
  for (size_t i = 1; i < data.size(); ++i) {
    if (data[i].value < data[best_data_idx].value) best_data_idx = i;
  }
  std::vector<std::vector<double>> candidates = explored;
  candidates.push_back(outer_minimize(mean_surface, bounds, config.outer,
                                      mix_seed(config.seed, 0x33), data[best_data_idx].theta));
  result.theta_star =
      select_optimal(final_model, candidates, ref_pdf, grid, config.select_maximize);

  if (config.refine_with_local_search) {
    // Optional polish on the true expected objective over the grid.
    auto true_expected = [&](std::span<const double> theta) {
      double acc = 0.0;
      for (int i = 0; i < n_grid; ++i) {
        acc += ref_pdf.weight(i) * objective.eval(theta, grid.level(i));
      }
      return direction * acc;
    };
    auto res = detail::pattern_search(true_expected, bounds, result.theta_star, 200, 0.05, 1e-5);
    if (res.value < true_expected(result.theta_star)) result.theta_star = res.x;
  }

  trace.theta_star = result.theta_star;
  return result;
}

OptimizerResult run_optimizer(const VqaProblem& problem, const DiscretePdf& ref_pdf,
                              const NoiseGrid& grid, const OptimizerConfig& config) {
  ObjectiveFunction objective;
  objective.eval = [&problem](std::span<const double> theta, double xi) {
    return problem.evaluate_objective(theta, xi);
  };
  objective.bounds.assign(problem.theta_bounds().begin(), problem.theta_bounds().end());
  return run_optimizer(objective, ref_pdf, grid, config);
}

} // namespace drvqa
