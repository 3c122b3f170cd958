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

#include "bornlp/detail/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>

#include "bornlp/common.hpp"

namespace bornlp::detail {

namespace {

void pivot(Eigen::MatrixXd& t, int row, int col) {
  t.row(row) /= t(row, col);
  for (int i = 0; i < t.rows(); ++i) {
    if (i != row && t(i, col) != 0.0) {
      t.row(i) -= t(i, col) * t.row(row);
    }
  }
}

}  // namespace

std::optional<BasicSolution> phase_one(const Eigen::MatrixXd& a,
                                       const Eigen::VectorXd& b, double tol) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  // Tableau rows 0..m-1 are constraints, row m is the phase-one objective.
  // Columns 0..n-1 original, n..n+m-1 artificial, last is the rhs.
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    const double s = b(i) < 0.0 ? -1.0 : 1.0;
    t.row(i).head(n) = s * a.row(i);
    t(i, n + i) = 1.0;
    t(i, n + m) = s * b(i);
    basis[i] = n + i;
  }
  for (int i = 0; i < m; ++i) {
    t.row(m).head(n) -= t.row(i).head(n);
    t(m, n + m) -= t(i, n + m);
  }

  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double piv_tol = 1e-11 * scale;
  const int max_iter = 50 * (n + m) + 1000;
  for (int iter = 0; iter < max_iter; ++iter) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j) {
      if (t(m, j) < -piv_tol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    double best = 0.0;
    for (int i = 0; i < m; ++i) {
      if (t(i, enter) > piv_tol) {
        const double r = t(i, n + m) / t(i, enter);
        if (leave < 0 || r < best - 1e-14 ||
            (std::abs(r - best) <= 1e-14 && basis[i] < basis[leave])) {
          leave = i;
          best = r;
        }
      }
    }
    if (leave < 0) break;  // unbounded direction cannot occur in phase one
    pivot(t, leave, enter);
    basis[leave] = enter;
  }

  if (-t(m, n + m) > tol) return std::nullopt;

  // Drive remaining artificials out of the basis; rows where that is
  // impossible are linearly dependent on the others.
  std::vector<int> keep;
  for (int i = 0; i < m; ++i) {
    if (basis[i] >= n) {
      int col = -1;
      for (int j = 0; j < n; ++j) {
        if (std::abs(t(i, j)) > 1e-9 * scale &&
            std::find(basis.begin(), basis.end(), j) == basis.end()) {
          col = j;
          break;
        }
      }
      if (col < 0) continue;
      pivot(t, i, col);
      basis[i] = col;
    }
    keep.push_back(i);
  }

  BasicSolution out;
  out.rows = keep;
  out.x = Eigen::VectorXd::Zero(n);
  for (int i : keep) {
    out.basis.push_back(basis[i]);
    out.x(basis[i]) = std::max(0.0, t(i, n + m));
  }
  std::sort(out.basis.begin(), out.basis.end());
  return out;
}

std::vector<int> independent_rows(const Eigen::MatrixXd& a,
                                  const Eigen::VectorXd& b, double eps_rank,
                                  double eps_rhs, int* inconsistent) {
  // Modified Gram-Schmidt with one re-orthogonalization pass. The rhs is
  // carried along with the same combinations, so a dependent row exposes an
  // incompatible rhs as a nonzero residual.
  std::vector<Eigen::VectorXd> q;
  std::vector<double> qb;
  std::vector<int> kept;
  if (inconsistent != nullptr) *inconsistent = -1;
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    Eigen::VectorXd v = a.row(k).transpose();
    double vb = b(k);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < q.size(); ++j) {
        const double c = q[j].dot(v);
        v -= c * q[j];
        vb -= c * qb[j];
      }
    }
    if (v.size() == 0 || v.cwiseAbs().maxCoeff() <= eps_rank) {
      if (std::abs(vb) > eps_rhs * std::max(1.0, std::abs(b(k))) &&
          inconsistent != nullptr && *inconsistent < 0) {
        *inconsistent = static_cast<int>(k);
      }
      continue;
    }
    const double norm = v.norm();
    q.push_back(v / norm);
    qb.push_back(vb / norm);
    kept.push_back(static_cast<int>(k));
  }
  return kept;
}

std::optional<Eigen::VectorXd> basic_solution(const Eigen::MatrixXd& a,
                                              const Eigen::VectorXd& b,
                                              const std::vector<int>& basis) {
  const int m = static_cast<int>(a.rows());
  Eigen::MatrixXd bm(m, static_cast<int>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) bm.col(k) = a.col(basis[k]);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(bm);
  lu.setThreshold(1e-10);
  if (lu.rank() < m || static_cast<int>(basis.size()) != m) return std::nullopt;
  return Eigen::VectorXd(lu.solve(b));
}

std::vector<std::vector<int>> feasible_bases(const Eigen::MatrixXd& a,
                                             const Eigen::VectorXd& b,
                                             const std::vector<int>& start,
                                             double tol, std::size_t limit) {
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  std::set<std::vector<int>> seen{start};
  std::deque<std::vector<int>> queue{start};
  std::vector<std::vector<int>> out;
  while (!queue.empty()) {
    auto basis = std::move(queue.front());
    queue.pop_front();
    out.push_back(basis);
    if (out.size() >= limit) {
      throw Error("vertex enumeration exceeded " + std::to_string(limit) +
                  " feasible bases");
    }
    Eigen::MatrixXd bm(m, m);
    for (int k = 0; k < m; ++k) bm.col(k) = a.col(basis[k]);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(bm);
    const Eigen::VectorXd xb = lu.solve(b);
    const Eigen::MatrixXd inv_a = lu.solve(a);
    std::vector<char> in_basis(n, 0);
    for (int j : basis) in_basis[j] = 1;
    for (int j = 0; j < n; ++j) {
      if (in_basis[j]) continue;
      const Eigen::VectorXd dcol = inv_a.col(j);
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        if (dcol(i) > tol) best = std::min(best, std::max(0.0, xb(i)) / dcol(i));
      }
      if (!std::isfinite(best)) continue;
      for (int i = 0; i < m; ++i) {
        if (dcol(i) > tol &&
            std::max(0.0, xb(i)) / dcol(i) <= best + 1e-12 * (1.0 + best)) {
          auto next = basis;
          next[i] = j;
          std::sort(next.begin(), next.end());
          if (seen.insert(next).second) queue.push_back(std::move(next));
        }
      }
    }
  }
  return out;
}

}  // namespace bornlp::detail
