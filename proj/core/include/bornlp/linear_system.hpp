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

#include "bornlp/boolean.hpp"

namespace bornlp {

/// The equality part of the LP {A p = b, p >= 0}. Rows are linearly
/// independent; row 0 is always the normalization row.
struct LinearSystem {
  Register reg;
  Eigen::MatrixXd a;        ///< m x d
  Eigen::VectorXd b;        ///< length m
  std::vector<int> source;  ///< per row: constraint index, -1 for normalization

  int m() const noexcept { return static_cast<int>(a.rows()); }
  std::size_t d() const noexcept { return reg.dim(); }

  /// max_i |(A p - b)_i|
  double residual(const Distribution& p) const;
};

/// Assembles normalization plus one row per constraint and drops rows that
/// are linear combinations of earlier ones. Throws InfeasibleError naming
/// the first constraint whose row is dependent but has an incompatible rhs.
LinearSystem build_system(const Register& reg,
                          const std::vector<ConstraintSpec>& constraints);

/// Same as above from raw equations; `source` labels default to positions.
LinearSystem build_system(const Register& reg,
                          const std::vector<LinearEquation>& equations);

/// System whose solution set is span(vectors) intersected with the simplex:
/// normalization plus a basis of the orthogonal complement of the span.
/// Returns the rank of the span through `rank` when non-null.
LinearSystem span_system(const Register& reg,
                         const std::vector<Distribution>& vectors,
                         int* rank = nullptr);

/// True iff a nonnegative solution exists.
bool feasible(const LinearSystem& system);

/// Some nonnegative solution (a basic one), or nullopt.
std::optional<Distribution> feasible_point(const LinearSystem& system);

}  // namespace bornlp
