// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>

#include "drvqa/gp.hpp"
#include "drvqa/lhs.hpp"
#include "drvqa/problem.hpp"
#include "drvqa/worst_case.hpp"

namespace drvqa {

enum class Method { Drbo, BoLcb, BoEi, BoStable };

const char* method_name(Method method);
Method method_from_name(const std::string& name);

struct OuterSearchBudget {
  int restarts = 32;
  int evals_per_restart = 100;
};

struct OptimizerConfig {
  Method method = Method::Drbo;
  int init_count = 10;     // M
  int max_iterations = 10; // T
  int batch_size = 5;      // K
  double beta = 2.0;
  double epsilon = 0.1;          // ball radius; DRBO only
  double mmd_lengthscale = 0.0;  // <= 0 selects 2x grid spacing
  std::uint64_t seed = 0;
  GpConfig gp;
  OuterSearchBudget outer;
  bool paper_ei = true;         // keep z = 0 at sigma = 0 instead of zeroing EI
  bool select_maximize = false; // flip the final-selection direction
  bool refine_with_local_search = false; // optional post-BO polish on true objective

  void validate() const;
};

struct IterationRecord {
  std::vector<double> explored_theta;
  std::vector<double> xi_batch;
  std::vector<double> observed_values;
  std::vector<double> worst_case_weights; // DRBO only, else empty
  double selection_value = 0.0;           // method acquisition at the chosen theta
  double nominal_value = 0.0;             // <w, LCB(theta, .)> at the chosen theta
  std::vector<double> incumbent_theta;    // posterior-selected solution this iteration
  double incumbent_score = 0.0;           // <w, mu(incumbent, .)>
};

struct OptimizationTrace {
  std::vector<std::vector<double>> initial_thetas;
  std::vector<double> initial_xis;
  std::vector<double> initial_values;
  std::vector<IterationRecord> iterations;
  std::vector<double> theta_star;

  // Equality on every field except the worst-case weight snapshots, which
  // only the DRBO method populates.
  bool core_equals(const OptimizationTrace& other) const;
};

struct OptimizerResult {
  std::vector<double> theta_star;
  OptimizationTrace trace;
};

// Surrogate-fit failure mid-run; carries everything recorded so far.
class optimizer_abort : public numerical_error {
public:
  optimizer_abort(const std::string& what, OptimizationTrace partial)
      : numerical_error(what), partial_trace(std::move(partial)) {}
  OptimizationTrace partial_trace;
};

// Multi-start bounded pattern search on an arbitrary surface: uniform
// restarts plus an optional incumbent start, each refined by compass search.
// Deterministic for a given seed; probes are appended to probe_log when set.
std::vector<double> outer_minimize(const std::function<double(std::span<const double>)>& surface,
                                   std::span<const Interval> bounds,
                                   const OuterSearchBudget& budget, std::uint64_t seed,
                                   const std::optional<std::vector<double>>& incumbent = {},
                                   std::vector<std::vector<double>>* probe_log = nullptr);

// Candidate extremizing <weights, posterior mean over the grid>; ties keep
// the earliest candidate.
std::vector<double> select_optimal(const GpModel& model,
                                   const std::vector<std::vector<double>>& candidates,
                                   const DiscretePdf& weights, const NoiseGrid& grid,
                                   bool maximize = false);

// Black-box objective over (theta, xi) with box bounds on theta.
struct ObjectiveFunction {
  std::function<double(std::span<const double>, double)> eval;
  std::vector<Interval> bounds;
};

// The full surrogate loop: Latin-hypercube initialization, per-iteration GP
// fit and acquisition minimization (method-specific), batch evaluation at
// reference-sampled noise levels, and posterior-based final selection.
OptimizerResult run_optimizer(const ObjectiveFunction& objective, const DiscretePdf& ref_pdf,
                              const NoiseGrid& grid, const OptimizerConfig& config);
OptimizerResult run_optimizer(const VqaProblem& problem, const DiscretePdf& ref_pdf,
                              const NoiseGrid& grid, const OptimizerConfig& config);

} // namespace drvqa
