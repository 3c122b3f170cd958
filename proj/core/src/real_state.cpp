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

#include "bornlp/real_state.hpp"

#include <algorithm>
#include <cmath>

namespace bornlp {

std::string selection_name(const Selection& s) {
  struct Visitor {
    std::string operator()(const SelectMaxEnt&) const { return "maxent"; }
    std::string operator()(const SelectCentroid&) const { return "centroid"; }
    std::string operator()(const SelectExplicit&) const { return "explicit"; }
    std::string operator()(const SelectVertexWeights&) const {
      return "vertex-weights";
    }
  };
  return std::visit(Visitor{}, s);
}

QuantumStateReal::QuantumStateReal(LinearSystem system, Polytope polytope,
                                   SimplicialRepresentation simplex,
                                   Distribution working, std::string selection)
    : system_(std::move(system)),
      polytope_(std::move(polytope)),
      simplex_(std::move(simplex)),
      working_(std::move(working)),
      selection_(std::move(selection)) {}

QuantumStateReal make_state(const LinearSystem& system, const Selection& selection) {
  return make_state(system, enumerate_vertices(system), selection);
}

QuantumStateReal make_state(const LinearSystem& system, const Polytope& polytope,
                            const Selection& selection) {
  Distribution w;
  if (std::holds_alternative<SelectMaxEnt>(selection)) {
    w = maxent(system, polytope).distribution;
  } else if (const auto* c = std::get_if<SelectCentroid>(&selection)) {
    w = centroid(polytope, c->options).point;
  } else if (const auto* e = std::get_if<SelectExplicit>(&selection)) {
    if (e->w.size() != system.d()) {
      throw InvalidArgument("explicit working distribution has wrong length");
    }
    w = validated_distribution(e->w);
    if (system.residual(w) > kTol.lin) {
      throw InvalidArgument("explicit working distribution violates the constraints");
    }
  } else {
    const auto& mu = std::get<SelectVertexWeights>(selection).mu;
    if (mu.size() != polytope.vertices.size()) {
      throw InvalidArgument("vertex weights: expected " +
                            std::to_string(polytope.vertices.size()) + " entries");
    }
    const auto weights = validated_distribution(mu);
    w.assign(system.d(), 0.0);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      for (std::size_t j = 0; j < w.size(); ++j) {
        w[j] += weights[i] * polytope.vertices[i][j];
      }
    }
  }
  for (double& x : w) {
    if (std::abs(x) < 1e-15) x = 0.0;
  }
  auto simplex = caratheodory(polytope, w);
  return QuantumStateReal(system, polytope, std::move(simplex), std::move(w),
                          selection_name(selection));
}

RealPovm RealPovm::partition(std::size_t d,
                             const std::vector<std::vector<std::size_t>>& parts) {
  RealPovm povm;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    Covector c{std::vector<double>(d, 0.0)};
    for (std::size_t s : parts[k]) {
      if (s >= d) throw InvalidArgument("partition: state index out of range");
      c.entries[s] = 1.0;
    }
    povm.elements.push_back(std::move(c));
    povm.labels.push_back(std::to_string(k));
  }
  return povm;
}

void RealPovm::validate(std::size_t d) const {
  if (elements.empty()) throw InvalidArgument("POVM has no elements");
  if (!labels.empty() && labels.size() != elements.size()) {
    throw InvalidArgument("POVM labels do not match elements");
  }
  std::vector<double> total(d, 0.0);
  for (const auto& e : elements) {
    if (e.size() != d) throw InvalidArgument("POVM element has wrong length");
    for (std::size_t j = 0; j < d; ++j) {
      if (e.entries[j] < -kTol.zero) {
        throw InvalidArgument("POVM element has a negative entry");
      }
      total[j] += e.entries[j];
    }
  }
  for (double t : total) {
    if (std::abs(t - 1.0) > kTol.lin) {
      throw InvalidArgument("POVM elements do not resolve the tautology");
    }
  }
}

double expectation(const QuantumStateReal& state, const Covector& q) {
  return q.apply(state.working());
}

bool is_pure(const QuantumStateReal& state) {
  const auto& mu = state.simplex().coords;
  return *std::max_element(mu.begin(), mu.end()) >= 1.0 - kTol.zero;
}

std::vector<double> measure(const QuantumStateReal& state, const RealPovm& povm) {
  povm.validate(state.d());
  std::vector<double> out;
  out.reserve(povm.elements.size());
  for (const auto& e : povm.elements) out.push_back(e.apply(state.working()));
  return out;
}

double chart_entropy(const QuantumStateReal& state) {
  return shannon_bits(state.working());
}

double simplicial_entropy(const QuantumStateReal& state) {
  return shannon_bits(state.simplex().coords);
}

}  // namespace bornlp
