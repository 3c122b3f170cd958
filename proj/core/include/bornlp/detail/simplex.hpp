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

#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace bornlp::detail {

/// Basic feasible solution of {A x = b, x >= 0}.
struct BasicSolution {
  std::vector<int> basis;   ///< basic column indices, sorted, size = rank(A)
  std::vector<int> rows;    ///< rows of A kept after dropping redundant ones
  Eigen::VectorXd x;        ///< full-length solution
};

/// Phase-one simplex with Bland's rule on a dense tableau. Returns the basic
/// solution reached, or nullopt when the minimum infeasibility exceeds `tol`.
/// Deterministic: the lowest-index eligible column always enters.
std::optional<BasicSolution> phase_one(const Eigen::MatrixXd& a,
                                       const Eigen::VectorXd& b,
                                       double tol = 1e-9);

/// Solution of the basic system for `basis`, or nullopt when the basis
/// matrix is singular. `a` must have full row rank = basis.size().
std::optional<Eigen::VectorXd> basic_solution(const Eigen::MatrixXd& a,
                                              const Eigen::VectorXd& b,
                                              const std::vector<int>& basis);

/// Indices of a maximal set of linearly independent rows of [a | b],
/// scanning rows in order. A row whose coefficients depend on earlier rows
/// but whose rhs does not is reported through `inconsistent` (first such row)
/// and skipped.
std::vector<int> independent_rows(const Eigen::MatrixXd& a,
                                  const Eigen::VectorXd& b, double eps_rank,
                                  double eps_rhs, int* inconsistent);

/// Every feasible basis reachable from `start` by ratio-test pivots.
/// `limit` caps the number of bases visited.
std::vector<std::vector<int>> feasible_bases(const Eigen::MatrixXd& a,
                                             const Eigen::VectorXd& b,
                                             const std::vector<int>& start,
                                             double tol, std::size_t limit);

}  // namespace bornlp::detail
