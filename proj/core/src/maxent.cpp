// Copyright 2026 The bornlp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bornlp/maxent.hpp"

#include <cmath>
#include <numbers>

#include "bornlp/detail/simplex.hpp"

namespace bornlp {

MaxEntDidNotConverge::MaxEntDidNotConverge(std::vector<double> last_iterate,
                                           double gradient_norm)
    : ConvergenceError("maxent: Newton iteration did not converge (gradient norm " +
                       std::to_string(gradient_norm) + ")"),
      last_(std::move(last_iterate)),
      grad_(gradient_norm) {}

MaxEntSolution maxent(const LinearSystem& system, const MaxEntOptions& options) {
  return maxent(system, enumerate_vertices(system), options);
}

namespace {

struct Dual {
  const Eigen::MatrixXd& c;  // k x s constraint rows (normalization removed)
  const Eigen::VectorXd& rhs;

  // Returns F and fills g (the exp-family point) for the given alpha.
  double eval(const Eigen::VectorXd& alpha, Eigen::VectorXd& g,
              double& log_z) const {
    const Eigen::VectorXd expo = -(c.transpose() * alpha);
    const double top = expo.size() > 0 ? expo.maxCoeff() : 0.0;
    g = (expo.array() - top).exp().matrix();
    const double z = g.sum();
    g /= z;
    log_z = top + std::log(z);
    return log_z + alpha.dot(rhs);
  }
};

}  // namespace

MaxEntSolution maxent(const LinearSystem& system, const Polytope& polytope,
                      const MaxEntOptions& options) {
  const std::size_t d = system.d();
  std::vector<char> used(d, 0);
  for (const auto& v : polytope.vertices) {
    for (std::size_t j = 0; j < d; ++j) {
      if (v[j] > kTol.zero) used[j] = 1;
    }
  }
  MaxEntSolution sol;
  std::vector<int> support;
  for (std::size_t j = 0; j < d; ++j) {
    if (used[j]) {
      support.push_back(static_cast<int>(j));
    } else {
      sol.pinned.push_back(j);
    }
  }
  const auto s = static_cast<Eigen::Index>(support.size());

  // Restrict rows to the support and drop the ones that became dependent.
  Eigen::MatrixXd ar(system.m(), s);
  for (Eigen::Index i = 0; i < s; ++i) ar.col(i) = system.a.col(support[i]);
  const double maxabs = std::max(1.0, ar.cwiseAbs().maxCoeff());
  const auto rows = detail::independent_rows(ar, system.b,
                                             kTol.rank_rel * maxabs, 1e-7, nullptr);
  // Row 0 is normalization and always survives; the rest carry multipliers.
  std::vector<int> free_rows(rows.begin() + 1, rows.end());
  const auto k = static_cast<Eigen::Index>(free_rows.size());
  Eigen::MatrixXd c(k, s);
  Eigen::VectorXd rhs(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    c.row(i) = ar.row(free_rows[i]);
    rhs(i) = system.b(free_rows[i]);
  }

  const Dual dual{c, rhs};
  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd g;
  double log_z = 0.0;
  double f = dual.eval(alpha, g, log_z);
  double grad_norm = 0.0;
  int iter = 0;
  for (;; ++iter) {
    const Eigen::VectorXd mean = c * g;
    const Eigen::VectorXd grad = rhs - mean;
    grad_norm = k > 0 ? grad.cwiseAbs().maxCoeff() : 0.0;
    if (grad_norm <= options.gradient_tol) break;
    if (iter >= options.max_iter) {
      throw MaxEntDidNotConverge(
          std::vector<double>(alpha.data(), alpha.data() + k), grad_norm);
    }
    const Eigen::MatrixXd hess =
        c * g.asDiagonal() * c.transpose() - mean * mean.transpose();
    Eigen::VectorXd step = hess.ldlt().solve(-grad);
    if (!step.allFinite()) step = -grad;
    double t = 1.0;
    Eigen::VectorXd g_new;
    double lz_new = 0.0;
    double f_new = dual.eval(alpha + step, g_new, lz_new);
    const double slope = grad.dot(step);
    while (f_new > f + 1e-4 * t * slope + 1e-15 * std::abs(f) && t > 1e-12) {
      t *= 0.5;
      f_new = dual.eval(alpha + t * step, g_new, lz_new);
    }
    alpha += t * step;
    g = std::move(g_new);
    log_z = lz_new;
    f = f_new;
  }

  // Quadratic convergence: a couple of full steps past the tolerance bring the
  // iterate to round-off level. Keep a step only if it lowers the gradient.
  for (int polish = 0; polish < 2 && k > 0 && grad_norm > 0.0; ++polish) {
    const Eigen::VectorXd mean = c * g;
    const Eigen::MatrixXd hess =
        c * g.asDiagonal() * c.transpose() - mean * mean.transpose();
    const Eigen::VectorXd step = hess.ldlt().solve(mean - rhs);
    if (!step.allFinite()) break;
    Eigen::VectorXd g_new;
    double lz_new = 0.0;
    const double f_new = dual.eval(alpha + step, g_new, lz_new);
    const double norm_new = (rhs - c * g_new).cwiseAbs().maxCoeff();
    if (!(norm_new < grad_norm)) break;
    alpha += step;
    g = std::move(g_new);
    log_z = lz_new;
    f = f_new;
    grad_norm = norm_new;
  }

  sol.distribution.assign(d, 0.0);
  for (Eigen::Index i = 0; i < s; ++i) sol.distribution[support[i]] = g(i);
  sol.log_partition = log_z;
  sol.multipliers.push_back(log_z);
  for (Eigen::Index i = 0; i < k; ++i) sol.multipliers.push_back(alpha(i));
  sol.multiplier_rows = free_rows;
  sol.entropy_bits = shannon_bits(sol.distribution);
  sol.dual_entropy_bits = (log_z + alpha.dot(rhs)) / std::numbers::ln2;
  sol.iterations = iter;
  sol.gradient_norm = grad_norm;
  if (std::abs(sol.entropy_bits - sol.dual_entropy_bits) > kTol.opt) {
    throw ConvergenceError("maxent: dual and primal entropies disagree");
  }
  if (system.residual(sol.distribution) > 1e-8) {
    throw ConvergenceError("maxent: solution violates the constraints");
  }
  return sol;
}

}  // namespace bornlp
