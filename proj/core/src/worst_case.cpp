// SPDX-License-Identifier: Apache-2.0
#include "drvqa/worst_case.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace drvqa {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Euclidean projection onto the probability simplex (sort-based).
VectorXd project_simplex(const VectorXd& y) {
  const int n = static_cast<int>(y.size());
  std::vector<double> u(y.data(), y.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cum = 0.0, tau = 0.0;
  for (int i = 0; i < n; ++i) {
    cum += u[i];
    const double t = (cum - 1.0) / (i + 1);
    if (u[i] - t > 0.0) tau = t;
  }
  VectorXd out(n);
  for (int i = 0; i < n; ++i) out(i) = std::max(y(i) - tau, 0.0);
  return out;
}

double ball_norm(const MmdBall& ball, const VectorXd& diff) {
  return (ball.cholesky_factor().transpose() * diff).norm();
}

// Radial shrinkage toward the center in the kernel metric.
VectorXd shrink_into_ball(const MmdBall& ball, const VectorXd& w, const VectorXd& center) {
  VectorXd diff = w - center;
  const double r = ball_norm(ball, diff);
  if (r <= ball.radius() || r == 0.0) return w;
  return center + diff * (ball.radius() / r);
}

// Alternating projections until simplex and ball both hold to tight tolerance.
VectorXd project_intersection(const MmdBall& ball, VectorXd w, const VectorXd& center,
                              int max_rounds) {
  for (int round = 0; round < max_rounds; ++round) {
    w = project_simplex(w); // sum one, nonnegative
    if (ball_norm(ball, w - center) <= ball.radius() + 1e-13) break;
    w = shrink_into_ball(ball, w, center); // sum preserved, ball tight
    if (w.minCoeff() >= -1e-15) break;
  }
  return w;
}

DiscretePdf finalize(const MmdBall& ball, VectorXd w, const VectorXd& center) {
  w = project_intersection(ball, std::move(w), center, 200);
  std::vector<double> out(w.size());
  double sum = 0.0;
  for (int i = 0; i < w.size(); ++i) {
    out[i] = std::max(w(i), 0.0);
    sum += out[i];
  }
  if (!(sum > 0.0)) {
    throw numerical_error("worst_case_distribution: projection collapsed to zero");
  }
  for (double& x : out) x /= sum;
  return DiscretePdf(std::move(out));
}

struct FaceSolution {
  VectorXd w;       // full-dimension point, zeros off the face
  bool feasible = false;
  double lambda = 0.0; // ball multiplier (1 / (2 t))
  double mu = 0.0;     // simplex multiplier
  bool degenerate = false;
};

// Maximizes v^T w on the affine face {w_i = 0 for i not in S, sum w = 1}
// subject to (w - w0)^T M (w - w0) <= eps^2, ignoring nonnegativity.
FaceSolution solve_on_face(const MatrixXd& m, const VectorXd& w0, const VectorXd& v,
                           double eps, const std::vector<int>& support) {
  const int n = static_cast<int>(w0.size());
  const int k = static_cast<int>(support.size());
  FaceSolution sol;

  MatrixXd a(k, k);
  VectorXd b(k), vs(k);
  const VectorXd mw0 = m * w0;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) a(i, j) = m(support[i], support[j]);
    b(i) = mw0(support[i]);
    vs(i) = v(support[i]);
  }
  a.diagonal().array() += 1e-13 * (a.trace() / k + 1.0);
  Eigen::LDLT<MatrixXd> ldlt(a);
  if (ldlt.info() != Eigen::Success) return sol;

  const VectorXd ones = VectorXd::Ones(k);
  const VectorXd alpha = ldlt.solve(ones);
  const VectorXd gamma = ldlt.solve(b);
  const VectorXd beta = ldlt.solve(vs);
  const double s_a = ones.dot(alpha);
  if (!(s_a > 0.0)) return sol;

  // Center of the ellipsoid slice on the face.
  const VectorXd u_c = gamma + ((1.0 - ones.dot(gamma)) / s_a) * alpha;

  auto embed = [&](const VectorXd& u) {
    VectorXd w = VectorXd::Zero(n);
    for (int i = 0; i < k; ++i) w(support[i]) = u(i);
    return w;
  };
  const VectorXd w_c = embed(u_c);
  const VectorXd d_c = w_c - w0;
  const double q_c = d_c.dot(m * d_c);
  const double eps2 = eps * eps;
  if (q_c > eps2 * (1.0 + 1e-10) + 1e-15) return sol; // slice is empty

  VectorXd h = beta - (ones.dot(beta) / s_a) * alpha;
  const double h_ah = h.dot(a * h);
  double t = 0.0;
  if (h_ah > 1e-30) {
    t = std::sqrt(std::max(eps2 - q_c, 0.0) / h_ah);
  }
  sol.w = embed(u_c + t * h);
  sol.feasible = true;
  if (t > 1e-14) {
    sol.lambda = 1.0 / (2.0 * t);
    sol.mu = (ones.dot(beta) - 2.0 * sol.lambda * (1.0 - ones.dot(gamma))) / s_a;
  } else {
    sol.degenerate = true; // tangent slice or v constant on the face
  }
  return sol;
}

struct ActiveSetResult {
  VectorXd w;
  bool found = false;
  bool certified = false; // KKT conditions verified
};

ActiveSetResult active_set_solve(const MmdBall& ball, const VectorXd& w0, const VectorXd& v) {
  const int n = static_cast<int>(w0.size());
  const MatrixXd& m = ball.kernel();
  const double eps = ball.radius();
  const double v_scale = v.cwiseAbs().maxCoeff() + 1.0;

  std::vector<int> support(n);
  std::iota(support.begin(), support.end(), 0);

  ActiveSetResult result;
  for (int iter = 0; iter < 4 * n + 8; ++iter) {
    FaceSolution sol = solve_on_face(m, w0, v, eps, support);
    if (!sol.feasible) return result;

    double min_u = 0.0;
    int min_idx = -1;
    for (int idx : support) {
      if (sol.w(idx) < min_u) {
        min_u = sol.w(idx);
        min_idx = idx;
      }
    }
    if (min_idx >= 0 && min_u < -1e-12) {
      if (support.size() <= 1) return result;
      support.erase(std::find(support.begin(), support.end(), min_idx));
      continue;
    }

    result.w = sol.w.cwiseMax(0.0);
    result.found = true;
    if (sol.degenerate) return result; // cannot verify multipliers

    // Release test: dropped coordinates need lambda * grad_i + mu - v_i >= 0.
    const VectorXd grad = 2.0 * (m * (sol.w - w0));
    double worst = -1e-9 * v_scale;
    int worst_idx = -1;
    for (int i = 0; i < n; ++i) {
      if (std::find(support.begin(), support.end(), i) != support.end()) continue;
      const double slack = sol.lambda * grad(i) + sol.mu - v(i);
      if (slack < worst) {
        worst = slack;
        worst_idx = i;
      }
    }
    if (worst_idx < 0) {
      result.certified = true;
      return result;
    }
    support.push_back(worst_idx);
    std::sort(support.begin(), support.end());
  }
  return result;
}

VectorXd pga_solve(const MmdBall& ball, const VectorXd& w0, const VectorXd& v,
                   VectorXd start, const WorstCaseOptions& options) {
  const double step = 1.0 / v.norm();
  VectorXd w = std::move(start);
  VectorXd best = w;
  double best_value = v.dot(best);
  for (int it = 0; it < options.pga_iterations; ++it) {
    w = project_intersection(ball, w + step * v, w0, options.projection_rounds);
    const double value = v.dot(w);
    if (value > best_value && w.minCoeff() >= -1e-12 &&
        ball_norm(ball, w - w0) <= ball.radius() + 1e-12) {
      best_value = value;
      best = w;
    }
  }
  return best;
}

} // namespace

DiscretePdf worst_case_distribution(const std::vector<double>& values, const MmdBall& ball,
                                    const WorstCaseOptions& options) {
  const int n = ball.center().size();
  if (static_cast<int>(values.size()) != n) {
    throw domain_error("worst_case_distribution: values dimension mismatch");
  }
  for (double x : values) {
    if (!std::isfinite(x)) throw domain_error("worst_case_distribution: values must be finite");
  }
  if (ball.radius() == 0.0) return ball.center();

  const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
  if (*min_it == *max_it) return ball.center(); // every feasible point is optimal

  VectorXd w0(n), v(n);
  for (int i = 0; i < n; ++i) {
    w0(i) = ball.center().weight(i);
    v(i) = values[i];
  }

  // Unconstrained simplex maximum: the earliest best vertex, when feasible.
  const int best_vertex = static_cast<int>(max_it - values.begin());
  {
    VectorXd vertex = VectorXd::Zero(n);
    vertex(best_vertex) = 1.0;
    if (ball_norm(ball, vertex - w0) <= ball.radius()) {
      return DiscretePdf::dirac(best_vertex, n);
    }
  }

  VectorXd incumbent = w0;
  double incumbent_value = v.dot(w0);
  bool certified = false;

  if (options.use_active_set) {
    const ActiveSetResult as = active_set_solve(ball, w0, v);
    if (as.found) {
      const double value = v.dot(as.w);
      if (value > incumbent_value) {
        incumbent = as.w;
        incumbent_value = value;
      }
      certified = as.certified;
    }
  }
  if (!certified && options.pga_iterations > 0) {
    const VectorXd refined = pga_solve(ball, w0, v, incumbent, options);
    if (v.dot(refined) > incumbent_value) incumbent = refined;
  }

  DiscretePdf out = finalize(ball, incumbent, w0);
  // The center is always feasible; never return anything worse for the adversary.
  if (out.dot(values) < v.dot(w0)) return ball.center();
  return out;
}

} // namespace drvqa
