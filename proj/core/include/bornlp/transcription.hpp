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

#include "bornlp/density_operator.hpp"
#include "bornlp/real_state.hpp"

namespace bornlp {

/// Gauge of a transcription: phases of the amplitude vector and, for mixed
/// states, the ancilla assignment of the simplex vertices. An empty phase
/// list is the natural gauge (nonnegative real amplitudes).
struct Gauge {
  std::vector<Complex> phases;                       ///< d (pure) or d * d_b (mixed)
  std::optional<std::vector<std::size_t>> ancilla_permutation;  ///< vertex i -> ancilla
  std::optional<std::size_t> ancilla_dim;            ///< defaults to the simplex rank

  static Gauge natural() { return {}; }
  bool is_natural() const noexcept {
    return phases.empty() && !ancilla_permutation && !ancilla_dim;
  }
};

/// Amplitudes sqrt(w) times the gauge phases.
CVector pure_amplitudes(const Distribution& w, const Gauge& gauge = Gauge::natural());

DensityOperator transcribe_pure(const Distribution& w, const Gauge& gauge = Gauge::natural());

/// Purifies with a basis-vector ancilla, attaches phases, and traces the
/// ancilla out. In the natural gauge rho = sum_i mu_i |sqrt w_i><sqrt w_i|.
DensityOperator transcribe_mixed(const QuantumStateReal& state,
                                 const Gauge& gauge = Gauge::natural());

HermitianObservable diagonal_observable(const Covector& q);

/// Re Tr(rho Q). Throws std::logic_error if the imaginary part exceeds 1e-9.
double born_expectation(const DensityOperator& rho, const HermitianObservable& obs);

/// sum_k M_k rho M_k^dag after checking sum_k M_k^dag M_k = 1 within 1e-8.
DensityOperator apply_channel(const DensityOperator& rho, const std::vector<CMatrix>& kraus);

}  // namespace bornlp
