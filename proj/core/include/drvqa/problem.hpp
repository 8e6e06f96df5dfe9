// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "drvqa/ansatz.hpp"
#include "drvqa/graph.hpp"
#include "drvqa/hamiltonians.hpp"
#include "drvqa/interval.hpp"
#include "drvqa/simulator.hpp"

namespace drvqa {

enum class ProblemKind { QaoaMaxCut, HeaVqe };

// A minimization problem over ansatz parameters theta at noise level xi.
// QaoaMaxCut minimizes -Tr[rho H_C]; HeaVqe minimizes Tr[rho H] with only
// the final rotation layer free (the fixed prefix comes from a multi-start
// noiseless optimization run at construction).
class VqaProblem {
public:
  struct HeaSetup {
    int restarts = 20;
    int evals_per_restart = 4000;
    std::uint64_t seed = 0;
    bool periodic = false;
  };

  static VqaProblem qaoa_maxcut(Graph graph, int depth);
  static VqaProblem hea_vqe(int n, double coupling, double field, int layers,
                            const HeaSetup& setup);
  static VqaProblem hea_vqe(int n, double coupling, double field, int layers) {
    return hea_vqe(n, coupling, field, layers, HeaSetup());
  }

  ProblemKind kind() const { return kind_; }
  int n_qubits() const { return n_qubits_; }
  int theta_dim() const { return static_cast<int>(bounds_.size()); }
  std::span<const Interval> theta_bounds() const { return bounds_; }
  const PauliHamiltonian& hamiltonian() const { return hamiltonian_; }

  Circuit build_circuit(std::span<const double> theta) const;

  // Objective in the minimization direction; theta must lie within bounds.
  double evaluate_objective(std::span<const double> theta, double xi) const;

  // Tr[rho H_C] / maxcut for QaoaMaxCut problems.
  double approximation_ratio(std::span<const double> theta, double xi) const;

  // QaoaMaxCut accessors
  const Graph& graph() const;
  int depth() const { return depth_; }
  int max_cut() const;

  // HeaVqe accessors
  int layers() const { return layers_; }
  std::span<const double> full_parameters() const { return full_theta_; }
  std::vector<double> noiseless_optimal_free() const;
  double noiseless_optimal_value() const { return noiseless_value_; }

private:
  VqaProblem() = default;

  ProblemKind kind_ = ProblemKind::QaoaMaxCut;
  int n_qubits_ = 0;
  std::vector<Interval> bounds_;
  PauliHamiltonian hamiltonian_{1, {}};

  // QaoaMaxCut
  std::optional<Graph> graph_;
  int depth_ = 0;
  int max_cut_ = 0;

  // HeaVqe
  double coupling_ = 0.0;
  double field_ = 0.0;
  int layers_ = 0;
  std::vector<double> full_theta_; // noiseless optimum over all n * layers parameters
  double noiseless_value_ = 0.0;
};

} // namespace drvqa
