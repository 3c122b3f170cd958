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
#include <string>
#include <variant>
#include <vector>

#include "bornlp/linear_system.hpp"
#include "bornlp/maxent.hpp"
#include "bornlp/polytope.hpp"

namespace bornlp {

/// Selection rules picking the working distribution out of the polytope.
struct SelectMaxEnt {};
struct SelectCentroid {
  CentroidOptions options{};
};
struct SelectExplicit {
  Distribution w;
};
/// Convex weights over the polytope vertices in their sorted order.
struct SelectVertexWeights {
  std::vector<double> mu;
};
using Selection =
    std::variant<SelectMaxEnt, SelectCentroid, SelectExplicit, SelectVertexWeights>;

std::string selection_name(const Selection& s);

/// A quantum state in the real probability space: the working distribution
/// together with a Carathéodory simplex of the specific polytope.
class QuantumStateReal {
 public:
  QuantumStateReal(LinearSystem system, Polytope polytope,
                   SimplicialRepresentation simplex, Distribution working,
                   std::string selection);

  const LinearSystem& system() const noexcept { return system_; }
  const Polytope& polytope() const noexcept { return polytope_; }
  const SimplicialRepresentation& simplex() const noexcept { return simplex_; }
  const Distribution& working() const noexcept { return working_; }
  const std::string& selection() const noexcept { return selection_; }
  std::size_t d() const noexcept { return working_.size(); }

 private:
  LinearSystem system_;
  Polytope polytope_;
  SimplicialRepresentation simplex_;
  Distribution working_;
  std::string selection_;
};

/// Builds the polytope, applies the selection rule and wraps the result in
/// its simplicial representation. Throws InvalidArgument when an explicit
/// point is not in the polytope.
QuantumStateReal make_state(const LinearSystem& system, const Selection& selection);

/// Variant reusing an enumerated polytope.
QuantumStateReal make_state(const LinearSystem& system, const Polytope& polytope,
                            const Selection& selection);

/// Resolution of the tautology: covectors with nonnegative entries that sum
/// to the all-ones covector.
struct RealPovm {
  std::vector<Covector> elements;
  std::vector<std::string> labels;

  /// Partition of the states into the given parts (0-based indices).
  static RealPovm partition(std::size_t d,
                            const std::vector<std::vector<std::size_t>>& parts);
  void validate(std::size_t d) const;
};

double expectation(const QuantumStateReal& state, const Covector& q);
bool is_pure(const QuantumStateReal& state);
std::vector<double> measure(const QuantumStateReal& state, const RealPovm& povm);
double chart_entropy(const QuantumStateReal& state);
double simplicial_entropy(const QuantumStateReal& state);

}  // namespace bornlp
