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

#include <cstdint>
#include <vector>

#include "bornlp/linear_system.hpp"

namespace bornlp {

/// Vertex set of the specific polytope {A p = b, p >= 0}.
struct Polytope {
  std::vector<Distribution> vertices;  ///< descending lexicographic order
  int affine_dim = 0;                  ///< dimension of the vertex hull
  int m = 0;                           ///< rank of the generating system

  std::size_t d() const noexcept {
    return vertices.empty() ? 0 : vertices.front().size();
  }
  bool is_simplicial() const noexcept {
    return static_cast<int>(vertices.size()) == affine_dim + 1;
  }
};

enum class VertexStrategy {
  kAuto,        ///< exhaustive when C(d, m) is small, pivot search otherwise
  kExhaustive,  ///< every m-subset of columns as a candidate basis
  kPivot,       ///< breadth-first search over adjacent feasible bases
};

struct VertexOptions {
  VertexStrategy strategy = VertexStrategy::kAuto;
  std::uint64_t exhaustive_limit = 2'000'000;  ///< max C(d, m) for kAuto
  std::size_t basis_limit = 5'000'000;         ///< guard for kPivot
};

/// All extreme points of the feasible set. Throws InfeasibleError if empty.
Polytope enumerate_vertices(const LinearSystem& system,
                            const VertexOptions& options = {});

/// Barycentric coordinates of a point with respect to a simplex of vertices.
struct SimplicialRepresentation {
  std::vector<Distribution> vertices;  ///< w_i, affinely independent
  std::vector<double> coords;          ///< mu_i > 0, sum to one

  std::size_t rank() const noexcept { return vertices.size(); }
  Distribution point() const;
};

/// Picks affinely independent polytope vertices whose hull contains
/// `anchor`, preferring earlier vertices; zero-weight vertices are dropped.
/// Throws InvalidArgument if the anchor is outside the polytope.
SimplicialRepresentation caratheodory(const Polytope& polytope,
                                      const Distribution& anchor);

struct CentroidOptions {
  std::size_t samples = 200'000;  ///< accepted draws for non-simplicial hulls
  std::uint64_t seed = 20260417;
};

struct CentroidEstimate {
  Distribution point;
  std::vector<double> standard_error;  ///< zeros when exact
  bool exact = true;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Uniform-density center of mass. Exact (vertex average) for simplices;
/// otherwise estimated by rejection sampling with mt19937_64.
CentroidEstimate centroid(const Polytope& polytope,
                          const CentroidOptions& options = {});

/// True when x and y agree entrywise within `tol`.
bool same_point(const Distribution& x, const Distribution& y, double tol);

}  // namespace bornlp
