// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>

#include "drvqa/optimizer.hpp"

namespace drvqa {

struct QaoaSuiteSpec {
  int n_vertices = 8;
  int degree = 3;
  int depth = 1;
  int graph_count = 5;
  std::uint64_t graph_seed = 7;
};

struct VqeSuiteSpec {
  int n_spins = 4;
  double coupling = 1.0;
  double field = 0.2;
  int layers = 2;
  int setup_restarts = 20;
  int setup_evals = 4000;
  std::uint64_t setup_seed = 0;
  bool periodic = false;
};

struct ShiftSeries {
  std::vector<double> means; // evaluation-pdf means, index 0 = reference
  double std_dev = 0.01;

  static ShiftSeries linear(double start, double step, int count, double std_dev);
};

struct ExperimentConfig {
  ProblemKind kind = ProblemKind::QaoaMaxCut;
  QaoaSuiteSpec qaoa;
  VqeSuiteSpec vqe;

  int grid_size = 20;
  double grid_min = 0.0;
  double grid_max = 0.08;
  double ref_mean = -0.01;
  double ref_std = 0.01;
  ShiftSeries shifts = ShiftSeries::linear(-0.01, 0.01, 9, 0.01);

  std::vector<Method> methods = {Method::Drbo, Method::BoLcb, Method::BoEi, Method::BoStable};

  // Optimizer template; init_count / max_iterations of 0 select the
  // per-problem defaults (20 * depth for QAOA, 40 for VQE).
  int init_count = 0;
  int max_iterations = 0;
  int batch_size = 5;
  double beta = 2.0;
  double epsilon = 0.1;
  double mmd_lengthscale = 0.0;
  OuterSearchBudget outer;
  GpConfig gp;

  std::vector<std::uint64_t> seeds = {1, 2, 3};
  std::string out_dir = "results";
  int jobs = 1;

  void validate() const;

  static ExperimentConfig qaoa_desk();
  static ExperimentConfig vqe_desk();

  // Strict parse: unknown keys anywhere are rejected with config_error.
  static ExperimentConfig from_json_text(const std::string& text);
  static ExperimentConfig from_json_file(const std::string& path);
  std::string to_json_text() const;
};

struct ResultRow {
  std::string method;
  std::string problem_id;
  std::uint64_t seed = 0;
  int shift_index = 0;
  double eval_mean = 0.0;       // mean noise level of the evaluation pdf
  double metric_expected = 0.0; // <shift pdf, metric_xi>
  std::vector<double> metric_xi;

  bool operator==(const ResultRow&) const = default;
};

struct ResultsTable {
  int grid_size = 0;
  std::vector<ResultRow> rows;

  bool operator==(const ResultsTable&) const = default;
};

struct RunRecord {
  std::string method;
  std::string problem_id;
  std::uint64_t seed = 0;
  std::vector<double> theta_star;
  OptimizationTrace trace;
};

struct SweepOutput {
  ResultsTable table;
  std::vector<RunRecord> runs;
};

// One optimization run per (method, problem, seed) under the reference pdf,
// then exact expected metrics over the grid for every shifted pdf. The
// metric is the approximation ratio for QAOA and the raw energy for VQE.
// Cells run concurrently up to config.jobs; output order is deterministic.
// If a cell fails, completed cells are handed to flush_on_error (when set)
// before the error propagates.
SweepOutput run_shift_sweep(const ExperimentConfig& config,
                            const std::function<void(const SweepOutput&)>& flush_on_error = {});

// (E[f(theta)] - E[f(theta0)]) / E[f(theta0)] with exact grid expectations.
double relative_improvement(std::span<const double> theta, std::span<const double> theta0,
                            const DiscretePdf& pdf, const VqaProblem& problem,
                            const NoiseGrid& grid);

struct LandscapeScan {
  std::vector<double> gamma_axis;
  std::vector<double> beta_axis;
  Eigen::MatrixXd values; // values(i, j) = objective at (gamma_i, beta_j)
  int argmin_gamma = 0;
  int argmin_beta = 0;
  double xi = 0.0;
};

// Dense objective scan of a depth-1 QAOA problem over its (gamma, beta) box.
LandscapeScan landscape_scan(const VqaProblem& problem, int gamma_steps, int beta_steps,
                             double xi, int jobs = 1);

enum class ExportFormat { Csv, Json };

// Writes results.csv / results.json plus traces.json under out_dir.
void export_results(const ResultsTable& table, const std::vector<RunRecord>& runs,
                    const std::string& out_dir, ExportFormat format);

ResultsTable import_results_csv(const std::string& path);
ResultsTable import_results_json(const std::string& path);

void write_landscape_csv(const LandscapeScan& scan, const std::string& path);

} // namespace drvqa
