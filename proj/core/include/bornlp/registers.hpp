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

#include "bornlp/real_state.hpp"

namespace bornlp {

/// Split of an N-bit register into the first n_a variables (A) and the last
/// n_b (B). Joint index: w_c = w_a * d_b + w_b.
struct BipartiteSplit {
  int n_a = 1;
  int n_b = 1;

  std::size_t d_a() const noexcept { return std::size_t{1} << n_a; }
  std::size_t d_b() const noexcept { return std::size_t{1} << n_b; }
  std::size_t d_c() const noexcept { return d_a() * d_b(); }
  void validate() const;
};

enum class Side { kA, kB };

Distribution product(const Distribution& w_a, const Distribution& w_b);
Distribution marginal(const Distribution& w_c, const BipartiteSplit& split, Side side);

/// S(P_c || P_a x P_b) in bits.
double entanglement_relative_entropy(const Distribution& w_c,
                                     const BipartiteSplit& split);
/// H(A) + H(B) - H(A,B) in bits.
double mutual_information(const Distribution& w_c, const BipartiteSplit& split);

struct PartialSystem {
  LinearSystem system;         ///< span of the conditionals intersected with the simplex
  QuantumStateReal state;      ///< working distribution = marginal
  std::vector<Distribution> conditionals;
  int rank = 0;                ///< r_a
};

/// Partial LP system of one side: the conditional distributions given each
/// value of the other side with nonzero probability, their span rank r, and
/// the rank d - r + 1 system describing span ∩ simplex.
PartialSystem partial_lp_system(const Distribution& w_c, const BipartiteSplit& split,
                                Side side);

struct NonSignalingResult {
  bool ok = true;
  double max_deviation = 0.0;
};

/// Checks that the `side` marginal is the same for every member of a family
/// of joint distributions indexed by the remote party's setting.
NonSignalingResult non_signaling_check(const std::vector<Distribution>& family,
                                       const BipartiteSplit& split, Side side,
                                       double tol = kTol.nonsignal);

/// Basis-vector purification: w_c[a * d_b + i] = mu_i w_i[a] for i < r.
/// Throws InvalidArgument when d_b < r.
Distribution purify(const QuantumStateReal& state, std::size_t d_b);

}  // namespace bornlp
