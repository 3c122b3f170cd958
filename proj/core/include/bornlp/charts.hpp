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

#include <variant>
#include <vector>

#include "bornlp/density_operator.hpp"
#include "bornlp/real_state.hpp"

namespace bornlp {

/// Eigenbasis of rho as a chart (descending eigenvalues).
Chart canonical_chart(const DensityOperator& rho);

/// Returned by reverse_transcribe when the squared moduli of the support
/// eigenvectors, seen from the chart, do not have full rank.
struct SingularChart {
  int span_rank = 0;   ///< rank of {|e_i|^2}
  int state_rank = 0;  ///< rank of rho
};

using ReverseTranscription = std::variant<QuantumStateReal, SingularChart>;

/// Real quantum state whose working distribution is the diagonal of rho in
/// the chart and whose polytope is span{|e_i|^2} intersected with the
/// simplex. The chart dimension must be a power of two.
ReverseTranscription reverse_transcribe(const DensityOperator& rho, const Chart& chart);

/// d + 1 mutually unbiased charts for N = 1, 2, 3: the computational basis
/// followed by one basis per element of GF(2^N).
std::vector<Chart> mub_cluster(int n_vars);

/// max_ij |<c1_i | c2_j>|.
double chart_overlap(const Chart& c1, const Chart& c2);

/// Qubit chart rotated by angle t in the real plane: columns
/// (cos t, sin t) and (-sin t, cos t).
Chart rotation_chart(double t);

}  // namespace bornlp
