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

#include "bornlp/boolean.hpp"

#include <cstdlib>
#include <string>

namespace bornlp {

Register::Register(int n_vars) : n_(n_vars) {
  if (n_vars < 1 || n_vars > kMaxVars) {
    throw InvalidArgument("register size must be in [1, " +
                          std::to_string(kMaxVars) + "], got " +
                          std::to_string(n_vars));
  }
}

int Register::bit(std::size_t index, int var) const {
  if (var < 1 || var > n_ || index >= dim()) {
    throw InvalidArgument("bit(" + std::to_string(index) + ", " + std::to_string(var) +
                          ") out of range for " + std::to_string(n_) + " variables");
  }
  return static_cast<int>((index >> (n_ - var)) & 1U);
}

std::vector<ClassicalState> enumerate_states(const Register& reg) {
  std::vector<ClassicalState> out;
  out.reserve(reg.dim());
  for (std::size_t k = 0; k < reg.dim(); ++k) {
    ClassicalState s{k, {}};
    s.assignment.resize(reg.n_vars());
    for (int v = 1; v <= reg.n_vars(); ++v) {
      s.assignment[v - 1] = static_cast<std::uint8_t>(reg.bit(k, v));
    }
    out.push_back(std::move(s));
  }
  return out;
}

double Covector::apply(const Distribution& p) const {
  if (p.size() != entries.size()) {
    throw InvalidArgument("covector/distribution size mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += entries[i] * p[i];
  return s;
}

namespace {

void check_literals(const Register& reg, const std::vector<Literal>& lits) {
  std::vector<int> seen(reg.n_vars() + 1, 0);
  for (Literal l : lits) {
    const int v = std::abs(l);
    if (l == 0 || v > reg.n_vars()) {
      throw InvalidArgument("literal " + std::to_string(l) +
                            " out of range for N = " +
                            std::to_string(reg.n_vars()));
    }
    const int sign = l > 0 ? 1 : -1;
    if (seen[v] == -sign) {
      throw InvalidArgument("contradictory literals on variable " +
                            std::to_string(v));
    }
    seen[v] = sign;
  }
}

}  // namespace

Covector requirement_indicator(const Register& reg,
                               const std::vector<Literal>& literals) {
  check_literals(reg, literals);
  Covector c{std::vector<double>(reg.dim(), 0.0)};
  for (std::size_t k = 0; k < reg.dim(); ++k) {
    bool ok = true;
    for (Literal l : literals) {
      const int want = l > 0 ? 1 : 0;
      if (reg.bit(k, std::abs(l)) != want) {
        ok = false;
        break;
      }
    }
    if (ok) c.entries[k] = 1.0;
  }
  return c;
}

Covector state_indicator(const Register& reg,
                         const std::vector<std::size_t>& states) {
  Covector c{std::vector<double>(reg.dim(), 0.0)};
  for (std::size_t s : states) {
    if (s >= reg.dim()) {
      throw InvalidArgument("state index " + std::to_string(s) +
                            " out of range");
    }
    c.entries[s] = 1.0;
  }
  return c;
}

LinearEquation requirement_to_lineq(const Register& reg,
                                    const ConstraintSpec& spec) {
  struct Visitor {
    const Register& reg;
    LinearEquation operator()(const RequirementProb& r) const {
      return {requirement_indicator(reg, r.literals), r.rhs};
    }
    LinearEquation operator()(const RequirementEquality& r) const {
      Covector a = requirement_indicator(reg, r.lhs);
      const Covector b = requirement_indicator(reg, r.rhs);
      for (std::size_t i = 0; i < a.entries.size(); ++i) {
        a.entries[i] -= b.entries[i];
      }
      return {std::move(a), 0.0};
    }
    LinearEquation operator()(const StateSum& s) const {
      return {state_indicator(reg, s.states), s.rhs};
    }
    LinearEquation operator()(const CovectorExpectation& e) const {
      if (e.covector.size() != reg.dim()) {
        throw InvalidArgument("covector has " +
                              std::to_string(e.covector.size()) +
                              " entries, register has " +
                              std::to_string(reg.dim()) + " states");
      }
      return {e.covector, e.rhs};
    }
  };
  return std::visit(Visitor{reg}, spec.body);
}

std::vector<LinearEquation> universal_equations(const Register& reg) {
  return {LinearEquation{Covector{std::vector<double>(reg.dim(), 1.0)}, 1.0}};
}

}  // namespace bornlp
