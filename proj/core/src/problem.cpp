// SPDX-License-Identifier: Apache-2.0
#include "drvqa/problem.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "drvqa/oracles.hpp"
#include "detail/pattern_search.hpp"

namespace drvqa {

VqaProblem VqaProblem::qaoa_maxcut(Graph graph, int depth) {
  if (depth < 1) throw domain_error("VqaProblem: QAOA depth must be at least one");
  VqaProblem p;
  p.kind_ = ProblemKind::QaoaMaxCut;
  p.n_qubits_ = graph.n_vertices();
  p.depth_ = depth;
  p.hamiltonian_ = maxcut_hamiltonian(graph);
  p.max_cut_ = brute_force_maxcut(graph);
  p.graph_ = std::move(graph);
  p.bounds_.assign(depth, Interval{0.0, std::numbers::pi});                 // gammas
  p.bounds_.insert(p.bounds_.end(), depth, Interval{0.0, std::numbers::pi / 2}); // betas
  return p;
}

VqaProblem VqaProblem::hea_vqe(int n, double coupling, double field, int layers,
                               const HeaSetup& setup) {
  if (layers < 1) throw domain_error("VqaProblem: HEA needs at least one layer");
  VqaProblem p;
  p.kind_ = ProblemKind::HeaVqe;
  p.n_qubits_ = n;
  p.layers_ = layers;
  p.coupling_ = coupling;
  p.field_ = field;
  p.hamiltonian_ = heisenberg_hamiltonian(n, coupling, field, setup.periodic);

  const int n_params = hea_parameter_count(n, layers);
  const std::vector<Interval> full_bounds(n_params, Interval{-std::numbers::pi, std::numbers::pi});

  // Noiseless multi-start optimization of the full parameter vector. The
  // result both fixes the non-final layers and serves as theta_0.
  auto noiseless = [&](std::span<const double> theta) {
    Circuit c = hea_circuit(n, layers, theta);
    return expectation(run_noisy_circuit(c, 0.0), p.hamiltonian_);
  };
  std::mt19937_64 rng(setup.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  detail::PatternSearchResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (int r = 0; r < setup.restarts; ++r) {
    std::vector<double> x0(n_params);
    for (int k = 0; k < n_params; ++k) {
      x0[k] = (r == 0) ? 0.0
                       : full_bounds[k].lo + unit(rng) * full_bounds[k].width();
    }
    auto res = detail::pattern_search(noiseless, full_bounds, std::move(x0),
                                      setup.evals_per_restart, 0.25, 1e-6);
    if (res.value < best.value) best = std::move(res);
  }
  p.full_theta_ = best.x;
  p.noiseless_value_ = best.value;

  // Only the final rotation layer stays free.
  p.bounds_.assign(n, Interval{-std::numbers::pi, std::numbers::pi});
  return p;
}

Circuit VqaProblem::build_circuit(std::span<const double> theta) const {
  if (static_cast<int>(theta.size()) != theta_dim()) {
    throw domain_error("VqaProblem: parameter dimension mismatch");
  }
  if (kind_ == ProblemKind::QaoaMaxCut) {
    return qaoa_circuit(*graph_, theta.subspan(0, depth_), theta.subspan(depth_, depth_));
  }
  std::vector<double> full(full_theta_);
  const int n_free = theta_dim();
  std::copy(theta.begin(), theta.end(), full.end() - n_free);
  return hea_circuit(n_qubits_, layers_, full);
}

double VqaProblem::evaluate_objective(std::span<const double> theta, double xi) const {
  if (!(xi >= 0.0 && xi <= 1.0)) {
    throw domain_error("VqaProblem: noise level must lie in [0, 1]");
  }
  for (int k = 0; k < theta_dim(); ++k) {
    if (!bounds_[k].contains(theta[k])) {
      throw domain_error("VqaProblem: theta outside bounds");
    }
  }
  const Circuit circuit = build_circuit(theta);
  const double value = expectation(run_noisy_circuit(circuit, xi), hamiltonian_);
  return kind_ == ProblemKind::QaoaMaxCut ? -value : value;
}

double VqaProblem::approximation_ratio(std::span<const double> theta, double xi) const {
  if (kind_ != ProblemKind::QaoaMaxCut) {
    throw domain_error("approximation_ratio: defined for QaoaMaxCut problems only");
  }
  if (max_cut_ == 0) {
    throw domain_error("approximation_ratio: graph has zero maximum cut");
  }
  return -evaluate_objective(theta, xi) / static_cast<double>(max_cut_);
}

const Graph& VqaProblem::graph() const {
  if (!graph_) throw domain_error("VqaProblem: no graph for this problem kind");
  return *graph_;
}

int VqaProblem::max_cut() const {
  if (kind_ != ProblemKind::QaoaMaxCut) {
    throw domain_error("VqaProblem: max_cut is only defined for QaoaMaxCut");
  }
  return max_cut_;
}

std::vector<double> VqaProblem::noiseless_optimal_free() const {
  if (kind_ != ProblemKind::HeaVqe) {
    throw domain_error("VqaProblem: noiseless optimum is only stored for HeaVqe");
  }
  return {full_theta_.end() - theta_dim(), full_theta_.end()};
}

} // namespace drvqa
