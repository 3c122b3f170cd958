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

#include "bornlp/density_operator.hpp"
#include "bornlp/measurement.hpp"

namespace bornlp {

DensityOperator reduced_state(const DensityOperator& rho_c, const BipartiteSplit& split,
                              Side keep);

struct ConditionalEntropy {
  double value = 0.0;     ///< S(rho_c) - S(rho_b), bits
  bool negative = false;  ///< below -1e-9, only possible for entangled states
};

ConditionalEntropy conditional_entropy(const DensityOperator& rho_c,
                                       const BipartiteSplit& split);

struct RelativeEntropy {
  double value = 0.0;            ///< bits, +inf when the support condition fails
  bool support_violation = false;
};

/// Tr rho (log2 rho - log2 sigma), logs taken on the supports.
RelativeEntropy quantum_relative_entropy(const DensityOperator& rho,
                                         const DensityOperator& sigma);

/// S(rho_c || rho_a (x) rho_b).
RelativeEntropy entanglement_entropy(const DensityOperator& rho_c,
                                     const BipartiteSplit& split);

struct DiscordResult {
  double value = 0.0;                   ///< max over the family
  std::size_t best = 0;                 ///< index of the maximizing POVM
  std::vector<double> per_measurement;  ///< S(rho_a | POVM_b) - S(rho_a | rho_b)
};

/// max over the family of sum_g p(g) S(rho_a^g) - S(rho_a | rho_b), where the
/// family acts on the B factor. Throws InvalidArgument on an empty family.
DiscordResult quantum_discord(const DensityOperator& rho_c, const BipartiteSplit& split,
                              const std::vector<HilbertPovm>& family_b);

/// Von Neumann measurements in the MUB cluster of the B factor (n_b <= 3).
std::vector<HilbertPovm> default_discord_family(const BipartiteSplit& split);

}  // namespace bornlp
