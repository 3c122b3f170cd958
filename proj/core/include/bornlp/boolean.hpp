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
#include <string>
#include <variant>
#include <vector>

#include "bornlp/common.hpp"

namespace bornlp {

inline constexpr int kMaxVars = 8;

/// A register of N Boolean variables. Classical states are indexed
/// big-endian: variable 1 is the most significant bit of the index.
class Register {
 public:
  explicit Register(int n_vars);

  int n_vars() const noexcept { return n_; }
  std::size_t dim() const noexcept { return std::size_t{1} << n_; }

  /// Value (0/1) of variable `var` (1-based) in state `index`.
  int bit(std::size_t index, int var) const;

 private:
  int n_;
};

struct ClassicalState {
  std::size_t index;
  std::vector<std::uint8_t> assignment;  ///< assignment[i] is variable i+1
};

/// All d classical states in index order.
std::vector<ClassicalState> enumerate_states(const Register& reg);

/// Real-valued function on the classical states, i.e. an element of the
/// dual space. Decision functions are covectors with 0/1 entries.
struct Covector {
  std::vector<double> entries;

  double apply(const Distribution& p) const;
  std::size_t size() const noexcept { return entries.size(); }
};

/// A literal is +v (variable v true) or -v (variable v false), 1-based.
using Literal = int;

/// Indicator of the set of states satisfying every literal of the
/// conjunction. The empty conjunction is the all-ones covector.
Covector requirement_indicator(const Register& reg,
                               const std::vector<Literal>& literals);

/// Indicator of an explicit set of states (0-based indices).
Covector state_indicator(const Register& reg,
                         const std::vector<std::size_t>& states);

struct RequirementProb {
  std::vector<Literal> literals;
  double rhs = 0.0;
};

/// P(lhs) = P(rhs) for two conjunctions of literals.
struct RequirementEquality {
  std::vector<Literal> lhs;
  std::vector<Literal> rhs;
};

struct StateSum {
  std::vector<std::size_t> states;
  double rhs = 0.0;
};

struct CovectorExpectation {
  Covector covector;
  double rhs = 0.0;
};

struct ConstraintSpec {
  std::variant<RequirementProb, RequirementEquality, StateSum,
               CovectorExpectation>
      body;
  int source_line = 0;  ///< 0 when not read from a file
};

/// One linear equation <a, p> = b over the probability simplex.
struct LinearEquation {
  Covector a;
  double b = 0.0;
};

/// Translates a constraint into a linear equation, validating literals and
/// state indices against the register.
LinearEquation requirement_to_lineq(const Register& reg,
                                    const ConstraintSpec& spec);

/// Equations every distribution satisfies: the normalization row.
std::vector<LinearEquation> universal_equations(const Register& reg);

}  // namespace bornlp
