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

#include <vector>

#include "bornlp/linear_system.hpp"
#include "bornlp/polytope.hpp"

namespace bornlp {

/// Maximum-entropy distribution of a feasible system.
///
/// The dual F(alpha) = log Z(alpha) + sum_j alpha_j b_j, with
/// Z = sum_w exp(-sum_j alpha_j a_jw), is minimized by damped Newton steps
/// over the non-normalization rows after restricting to coordinates that
/// are nonzero in some vertex.
struct MaxEntSolution {
  Distribution distribution;          ///< g
  std::vector<double> multipliers;    ///< alpha_0 = log Z, then one per kept row
  std::vector<int> multiplier_rows;   ///< system row for multipliers[1..]
  double log_partition = 0.0;         ///< log Z in nats
  double entropy_bits = 0.0;          ///< -sum g log2 g
  double dual_entropy_bits = 0.0;     ///< (log Z + alpha . b) / ln 2
  std::vector<std::size_t> pinned;    ///< coordinates forced to zero
  int iterations = 0;
  double gradient_norm = 0.0;
};

struct MaxEntOptions {
  int max_iter = 200;
  double gradient_tol = 1e-11;
};

class MaxEntDidNotConverge : public ConvergenceError {
 public:
  MaxEntDidNotConverge(std::vector<double> last_iterate, double gradient_norm);
  const std::vector<double>& last_iterate() const noexcept { return last_; }
  double gradient_norm() const noexcept { return grad_; }

 private:
  std::vector<double> last_;
  double grad_;
};

MaxEntSolution maxent(const LinearSystem& system,
                      const MaxEntOptions& options = {});

/// Variant that reuses an already enumerated polytope for the support.
MaxEntSolution maxent(const LinearSystem& system, const Polytope& polytope,
                      const MaxEntOptions& options = {});

}  // namespace bornlp
