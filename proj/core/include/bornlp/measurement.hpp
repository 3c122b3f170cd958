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

#include "bornlp/charts.hpp"
#include "bornlp/density_operator.hpp"

namespace bornlp {

/// Positive operators resolving the identity.
struct HilbertPovm {
  std::vector<CMatrix> elements;

  /// Projective measurement onto the basis of a chart.
  static HilbertPovm von_neumann(const Chart& chart);
  /// Throws InvalidArgument unless every element is PSD (-1e-9) and the
  /// elements sum to the identity within 1e-8.
  void validate() const;
  std::size_t dim() const noexcept {
    return elements.empty() ? 0 : static_cast<std::size_t>(elements.front().rows());
  }
};

/// Tr(Q1 Q2) = Tr(Q1) Tr(Q2) / d for every pair, within 1e-8.
bool povm_independent(const HilbertPovm& p1, const HilbertPovm& p2);

/// Effect Q with {Q, 1 - Q} independent of `povm`: Q = (1 + t e) / 2 where e
/// is a traceless Hermitian operator orthogonal to every Q_k / Tr Q_k - 1/d.
/// Throws Error when the POVM is informationally complete.
CMatrix independent_effect(const HilbertPovm& povm);

struct PovmEntropy {
  std::vector<double> probabilities;
  double info_gain = 0.0;  ///< N + sum p log2(p / q), q_k = Tr Q_k
  double entropy = 0.0;    ///< N - info_gain
};

PovmEntropy povm_entropy(const DensityOperator& rho, const HilbertPovm& povm);

struct EntropicBounds {
  double h1 = 0.0;
  double h2 = 0.0;
  double maassen_uffink = 0.0;  ///< log2(1 / overlap^2)
  double frank_lieb = 0.0;      ///< maassen_uffink + S(rho)
  bool satisfied = false;
};

EntropicBounds entropic_bounds(const DensityOperator& rho, const Chart& c1, const Chart& c2);

struct ClusterEntropy {
  std::vector<double> chart_entropies;
  double sum = 0.0;
  double bound = 0.0;  ///< (number of charts - 1) * N + S(rho)
  double delta = 0.0;  ///< sum - bound
};

/// Chart entropies over a set of charts, compared against k N + S(rho)
/// where k + 1 is the number of charts.
ClusterEntropy cluster_entropy(const DensityOperator& rho, const std::vector<Chart>& charts);

/// Tr(rho E) after checking 0 <= E <= 1.
double effect_probability(const DensityOperator& rho, const HermitianObservable& effect);

/// h = q w / <q, w> in a regular chart where the effect is diagonal.
Distribution induced_distribution(const DensityOperator& rho,
                                  const HermitianObservable& effect, const Chart& chart);

}  // namespace bornlp
