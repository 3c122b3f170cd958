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

// Independent reference implementations used to cross-check the library.
// None of these call into the LP or maximum-entropy code paths they verify.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <boost/rational.hpp>

#include "bornlp/scenarios.hpp"

namespace bornlp::testing {

using Rational = boost::rational<long long>;

struct RationalRow {
  std::vector<Rational> a;
  Rational b;
};

/// Vertices of {p >= 0, sum p = 1, A p = b} by trying every support set and
/// solving the restricted system exactly. Result in descending lexicographic
/// order, converted to double.
std::vector<Distribution> rational_vertices(int n_vars, const std::vector<RationalRow>& rows);

/// Maximum-entropy point by shrinking-grid search over the null space of the
/// constraints. Suitable for null spaces of dimension <= 3.
Distribution grid_maxent(const LinearSystem& system, int grid = 21, int rounds = 80);

/// Marginal by explicit bit loops.
Distribution brute_marginal(const Distribution& w, int n_a, int n_b, Side side);

/// max |a0 b0 + a1 b0 + a0 b1 - a1 b1| over deterministic +-1 assignments.
double brute_chsh_max();

// -- Random generators ------------------------------------------------------

using Rng = std::mt19937_64;

Distribution dirichlet(Rng& rng, std::size_t n, double alpha = 1.0);

/// A random feasible system: rows with entries in {-1, 0, 1} whose right-hand
/// sides are taken at a random interior point.
LinearSystem random_system(Rng& rng, int n_vars, int extra_rows);

/// A random real state: random system, random vertex weights.
QuantumStateReal random_state(Rng& rng, int n_vars);

CMatrix haar_unitary(Rng& rng, std::size_t d);
DensityOperator random_density(Rng& rng, std::size_t d, std::size_t rank);
HilbertPovm random_povm(Rng& rng, std::size_t d, std::size_t outcomes);

}  // namespace bornlp::testing
