// SPDX-License-Identifier: Apache-2.0
#include "drvqa/harness.hpp"

#include <cmath>
#include <sstream>

#include "detail/parallel.hpp"

namespace drvqa {

ShiftSeries ShiftSeries::linear(double start, double step, int count, double std_dev) {
  if (count < 1) throw domain_error("ShiftSeries: need at least one shift");
  ShiftSeries s;
  s.std_dev = std_dev;
  s.means.resize(count);
  for (int k = 0; k < count; ++k) s.means[k] = start + k * step;
  return s;
}

void ExperimentConfig::validate() const {
  if (shifts.means.empty()) throw config_error("ExperimentConfig: shift series is empty");
  if (!(shifts.std_dev > 0.0)) throw config_error("ExperimentConfig: shift std must be positive");
  if (methods.empty()) throw config_error("ExperimentConfig: no methods enabled");
  if (seeds.empty()) throw config_error("ExperimentConfig: no replication seeds");
  if (grid_size < 2) throw config_error("ExperimentConfig: grid needs at least two levels");
  if (!(grid_min < grid_max)) throw config_error("ExperimentConfig: grid_min must be below grid_max");
  if (jobs < 1) throw config_error("ExperimentConfig: jobs must be positive");
  if (batch_size < 1) throw config_error("ExperimentConfig: batch_size must be positive");
}

ExperimentConfig ExperimentConfig::qaoa_desk() {
  ExperimentConfig c;
  c.kind = ProblemKind::QaoaMaxCut;
  return c;
}

ExperimentConfig ExperimentConfig::vqe_desk() {
  ExperimentConfig c;
  c.kind = ProblemKind::HeaVqe;
  c.seeds = {1};
  return c;
}

namespace {

std::string format_compact(double v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

struct ProblemEntry {
  std::string id;
  VqaProblem problem;
};

std::vector<ProblemEntry> build_problems(const ExperimentConfig& config) {
  std::vector<ProblemEntry> out;
  if (config.kind == ProblemKind::QaoaMaxCut) {
    const QaoaSuiteSpec& q = config.qaoa;
    auto graphs = Graph::random_regular_set(q.n_vertices, q.degree, q.graph_count, q.graph_seed);
    for (int i = 0; i < static_cast<int>(graphs.size()); ++i) {
      std::string id = "qaoa-n" + std::to_string(q.n_vertices) + "-d" + std::to_string(q.degree) +
                       "-p" + std::to_string(q.depth) + "-g" + std::to_string(i);
      out.push_back({std::move(id), VqaProblem::qaoa_maxcut(graphs[i], q.depth)});
    }
  } else {
    const VqeSuiteSpec& v = config.vqe;
    VqaProblem::HeaSetup setup;
    setup.restarts = v.setup_restarts;
    setup.evals_per_restart = v.setup_evals;
    setup.seed = v.setup_seed;
    setup.periodic = v.periodic;
    std::string id = "heis-n" + std::to_string(v.n_spins) + "-J" + format_compact(v.coupling) +
                     "-B" + format_compact(v.field) + "-L" + std::to_string(v.layers);
    out.push_back({std::move(id),
                   VqaProblem::hea_vqe(v.n_spins, v.coupling, v.field, v.layers, setup)});
  }
  return out;
}

int default_init_count(const ExperimentConfig& config) {
  return config.kind == ProblemKind::QaoaMaxCut ? 20 * config.qaoa.depth : 40;
}

std::uint64_t mix_cell_seed(std::uint64_t seed, int problem_index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(problem_index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace

SweepOutput run_shift_sweep(const ExperimentConfig& config,
                            const std::function<void(const SweepOutput&)>& flush_on_error) {
  config.validate();
  const NoiseGrid grid = NoiseGrid::uniform(config.grid_size, config.grid_min, config.grid_max);
  const DiscretePdf ref_pdf = truncated_gaussian_pdf(config.ref_mean, config.ref_std, grid);

  std::vector<DiscretePdf> shift_pdfs;
  shift_pdfs.reserve(config.shifts.means.size());
  for (double mean : config.shifts.means) {
    shift_pdfs.push_back(truncated_gaussian_pdf(mean, config.shifts.std_dev, grid));
  }

  const std::vector<ProblemEntry> problems = build_problems(config);

  struct Cell {
    int problem_index;
    Method method;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (int p = 0; p < static_cast<int>(problems.size()); ++p) {
    for (Method m : config.methods) {
      for (std::uint64_t s : config.seeds) cells.push_back({p, m, s});
    }
  }

  struct CellOutput {
    RunRecord run;
    std::vector<double> metric_xi;
    bool done = false;
  };
  std::vector<CellOutput> outputs(cells.size());

  auto run_cell = [&](int index) {
    const Cell& cell = cells[index];
    const ProblemEntry& entry = problems[cell.problem_index];

    OptimizerConfig opt;
    opt.method = cell.method;
    opt.init_count = config.init_count > 0 ? config.init_count : default_init_count(config);
    opt.max_iterations =
        config.max_iterations > 0 ? config.max_iterations : default_init_count(config);
    opt.batch_size = config.batch_size;
    opt.beta = config.beta;
    opt.epsilon = config.epsilon;
    opt.mmd_lengthscale = config.mmd_lengthscale;
    opt.outer = config.outer;
    opt.gp = config.gp;
    opt.seed = mix_cell_seed(cell.seed, cell.problem_index); // shared across methods

    OptimizerResult res = run_optimizer(entry.problem, ref_pdf, grid, opt);

    CellOutput out;
    out.run = {method_name(cell.method), entry.id, cell.seed, res.theta_star, res.trace};
    out.metric_xi.resize(grid.size());
    for (int i = 0; i < grid.size(); ++i) {
      out.metric_xi[i] = config.kind == ProblemKind::QaoaMaxCut
                             ? entry.problem.approximation_ratio(res.theta_star, grid.level(i))
                             : entry.problem.evaluate_objective(res.theta_star, grid.level(i));
    }
    out.done = true;
    outputs[index] = std::move(out);
  };

  auto assemble = [&](bool completed_only) {
    SweepOutput sweep;
    sweep.table.grid_size = grid.size();
    for (size_t i = 0; i < cells.size(); ++i) {
      if (!outputs[i].done) {
        if (completed_only) continue;
        throw numerical_error("run_shift_sweep: missing cell output");
      }
      const Cell& cell = cells[i];
      for (int k = 0; k < static_cast<int>(shift_pdfs.size()); ++k) {
        ResultRow row;
        row.method = method_name(cell.method);
        row.problem_id = problems[cell.problem_index].id;
        row.seed = cell.seed;
        row.shift_index = k;
        row.eval_mean = shift_pdfs[k].mean_level(grid);
        row.metric_xi = outputs[i].metric_xi;
        row.metric_expected = shift_pdfs[k].dot(row.metric_xi);
        sweep.table.rows.push_back(std::move(row));
      }
      sweep.runs.push_back(outputs[i].run);
    }
    return sweep;
  };

  try {
    detail::parallel_for(static_cast<int>(cells.size()), config.jobs, run_cell);
  } catch (...) {
    if (flush_on_error) flush_on_error(assemble(true));
    throw;
  }
  return assemble(false);
}

double relative_improvement(std::span<const double> theta, std::span<const double> theta0,
                            const DiscretePdf& pdf, const VqaProblem& problem,
                            const NoiseGrid& grid) {
  if (pdf.size() != grid.size()) {
    throw domain_error("relative_improvement: pdf size differs from grid");
  }
  double expected = 0.0, expected0 = 0.0;
  for (int i = 0; i < grid.size(); ++i) {
    expected += pdf.weight(i) * problem.evaluate_objective(theta, grid.level(i));
    expected0 += pdf.weight(i) * problem.evaluate_objective(theta0, grid.level(i));
  }
  if (std::abs(expected0) <= 1e-12) {
    throw domain_error("relative_improvement: reference expectation is zero");
  }
  return (expected - expected0) / expected0;
}

LandscapeScan landscape_scan(const VqaProblem& problem, int gamma_steps, int beta_steps,
                             double xi, int jobs) {
  if (problem.kind() != ProblemKind::QaoaMaxCut || problem.theta_dim() != 2) {
    throw domain_error("landscape_scan: needs a depth-1 QAOA problem");
  }
  if (gamma_steps < 2 || beta_steps < 2) {
    throw domain_error("landscape_scan: need at least a 2x2 grid");
  }
  const Interval g_bounds = problem.theta_bounds()[0];
  const Interval b_bounds = problem.theta_bounds()[1];

  LandscapeScan scan;
  scan.xi = xi;
  scan.gamma_axis.resize(gamma_steps);
  scan.beta_axis.resize(beta_steps);
  for (int i = 0; i < gamma_steps; ++i) {
    scan.gamma_axis[i] = g_bounds.lo + g_bounds.width() * i / (gamma_steps - 1);
  }
  for (int j = 0; j < beta_steps; ++j) {
    scan.beta_axis[j] = b_bounds.lo + b_bounds.width() * j / (beta_steps - 1);
  }
  scan.values.resize(gamma_steps, beta_steps);

  detail::parallel_for(gamma_steps, jobs, [&](int i) {
    for (int j = 0; j < beta_steps; ++j) {
      const double theta[2] = {scan.gamma_axis[i], scan.beta_axis[j]};
      scan.values(i, j) = problem.evaluate_objective(theta, xi);
    }
  });

  for (int i = 0; i < gamma_steps; ++i) {
    for (int j = 0; j < beta_steps; ++j) {
      if (scan.values(i, j) < scan.values(scan.argmin_gamma, scan.argmin_beta)) {
        scan.argmin_gamma = i;
        scan.argmin_beta = j;
      }
    }
  }
  return scan;
}

} // namespace drvqa
