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

#include <cmath>

#include <gtest/gtest.h>

#include "bornlp/boolean.hpp"
#include "bornlp/common.hpp"
#include "bornlp/constraint_file.hpp"

namespace bornlp {
namespace {

TEST(Entropy, ShannonBits) {
  EXPECT_DOUBLE_EQ(shannon_bits({0.5, 0.5}), 1.0);
  EXPECT_DOUBLE_EQ(shannon_bits({1.0, 0.0}), 0.0);
  EXPECT_DOUBLE_EQ(shannon_bits({0.25, 0.25, 0.25, 0.25}), 2.0);
  EXPECT_NEAR(shannon_bits({1.0 / 6, 1.0 / 3, 1.0 / 3, 1.0 / 6}),
              -(2.0 / 6) * std::log2(1.0 / 6) - (2.0 / 3) * std::log2(1.0 / 3), 1e-15);
}

TEST(Entropy, RelativeEntropy) {
  EXPECT_DOUBLE_EQ(relative_entropy_bits({0.5, 0.5}, {0.5, 0.5}), 0.0);
  EXPECT_DOUBLE_EQ(relative_entropy_bits({1.0, 0.0}, {0.5, 0.5}), 1.0);
  EXPECT_TRUE(std::isinf(relative_entropy_bits({0.5, 0.5}, {1.0, 0.0})));
}

TEST(Distribution, Validation) {
  EXPECT_THROW(validated_distribution({0.5, 0.4}), InvalidArgument);
  EXPECT_THROW(validated_distribution({1.1, -0.1}), InvalidArgument);
  const auto p = validated_distribution({0.5 + 1e-12, 0.5, -1e-12});
  EXPECT_EQ(p[2], 0.0);
  EXPECT_NEAR(p[0] + p[1], 1.0, 1e-15);
}

TEST(Errors, CarryLocation) {
  const ParseError pe("bad token", 7);
  EXPECT_EQ(pe.line(), 7);
  EXPECT_NE(std::string(pe.what()).find("line 7"), std::string::npos);
  const InfeasibleError ie("no", 3);
  EXPECT_EQ(ie.constraint(), 3);
}

// -- Register ----------------------------------------------------------------

TEST(Register, BigEndianBits) {
  const Register reg(3);
  EXPECT_EQ(reg.dim(), 8u);
  // State 4 = 100: variable 1 is the most significant bit.
  EXPECT_EQ(reg.bit(4, 1), 1);
  EXPECT_EQ(reg.bit(4, 2), 0);
  EXPECT_EQ(reg.bit(4, 3), 0);
  EXPECT_EQ(reg.bit(1, 3), 1);
}

TEST(Register, Bounds) {
  EXPECT_THROW(Register(0), InvalidArgument);
  EXPECT_THROW(Register(kMaxVars + 1), InvalidArgument);
  const Register reg(2);
  EXPECT_THROW(reg.bit(4, 1), InvalidArgument);
  EXPECT_THROW(reg.bit(0, 3), InvalidArgument);
}

TEST(Register, EnumerateStates) {
  const auto states = enumerate_states(Register(2));
  ASSERT_EQ(states.size(), 4u);
  EXPECT_EQ(states[2].index, 2u);
  EXPECT_EQ(states[2].assignment, (std::vector<std::uint8_t>{1, 0}));
}

TEST(Indicator, Requirement) {
  const Register reg(2);
  EXPECT_EQ(requirement_indicator(reg, {1}).entries, (std::vector<double>{0, 0, 1, 1}));
  EXPECT_EQ(requirement_indicator(reg, {-2}).entries, (std::vector<double>{1, 0, 1, 0}));
  EXPECT_EQ(requirement_indicator(reg, {1, 2}).entries, (std::vector<double>{0, 0, 0, 1}));
  EXPECT_EQ(requirement_indicator(reg, {}).entries, (std::vector<double>{1, 1, 1, 1}));
  EXPECT_THROW(requirement_indicator(reg, {1, -1}), InvalidArgument);
  EXPECT_THROW(requirement_indicator(reg, {3}), InvalidArgument);
}

TEST(Indicator, States) {
  const Register reg(2);
  EXPECT_EQ(state_indicator(reg, {0, 3}).entries, (std::vector<double>{1, 0, 0, 1}));
  EXPECT_THROW(state_indicator(reg, {4}), InvalidArgument);
}

TEST(Requirement, ToLinearEquation) {
  const Register reg(2);
  const auto eq = requirement_to_lineq(reg, ConstraintSpec{RequirementEquality{{1}, {-2}}, 0});
  // P(x1) - P(not x2) = p4 - p1.
  EXPECT_EQ(eq.a.entries, (std::vector<double>{-1, 0, 0, 1}));
  EXPECT_EQ(eq.b, 0.0);
  const auto ex = requirement_to_lineq(
      reg, ConstraintSpec{CovectorExpectation{Covector{{1, 0, 0, -1}}, 0.25}, 0});
  EXPECT_EQ(ex.b, 0.25);
  EXPECT_THROW(requirement_to_lineq(
                   reg, ConstraintSpec{CovectorExpectation{Covector{{1, 0}}, 0.0}, 0}),
               InvalidArgument);
}

TEST(Requirement, UniversalEquations) {
  const auto u = universal_equations(Register(2));
  ASSERT_EQ(u.size(), 1u);
  EXPECT_EQ(u[0].a.entries, (std::vector<double>{1, 1, 1, 1}));
  EXPECT_EQ(u[0].b, 1.0);
}

// -- Constraint files --------------------------------------------------------

TEST(ConstraintFile, Numbers) {
  EXPECT_EQ(parse_number("3"), 3.0);
  EXPECT_EQ(parse_number("-0.25"), -0.25);
  EXPECT_EQ(parse_number("1/2"), 0.5);
  EXPECT_EQ(parse_number("-1/3"), -1.0 / 3);
  EXPECT_THROW(parse_number("1/0"), InvalidArgument);
  EXPECT_THROW(parse_number("abc"), InvalidArgument);
  EXPECT_THROW(parse_number(""), InvalidArgument);
}

TEST(ConstraintFile, Singlet) {
  const auto f = parse_constraints(
      "# comment\n"
      "vars 2\n"
      "req 1,2 = 0\n"
      "req -1,-2 = 0   # trailing\n"
      "\n"
      "req 1 = req 2\n");
  EXPECT_EQ(f.n_vars, 2);
  ASSERT_EQ(f.constraints.size(), 3u);
  EXPECT_EQ(f.constraints[0].source_line, 3);
  EXPECT_EQ(f.constraints[2].source_line, 6);
  const auto& eq = std::get<RequirementEquality>(f.constraints[2].body);
  EXPECT_EQ(eq.lhs, std::vector<Literal>{1});
  EXPECT_EQ(eq.rhs, std::vector<Literal>{2});
}

TEST(ConstraintFile, StatesAreOneBased) {
  const auto f = parse_constraints("vars 2\nstates {1,4} = 1/2\n");
  const auto& s = std::get<StateSum>(f.constraints[0].body);
  EXPECT_EQ(s.states, (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(s.rhs, 0.5);
}

TEST(ConstraintFile, Expect) {
  const auto f = parse_constraints("vars 1\nexpect 1/2,-1/2 = 0\n");
  const auto& e = std::get<CovectorExpectation>(f.constraints[0].body);
  EXPECT_EQ(e.covector.entries, (std::vector<double>{0.5, -0.5}));
}

TEST(ConstraintFile, ErrorsReportLines) {
  auto line_of = [](const char* text) {
    try {
      parse_constraints(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("req 1 = 0\n"), 1);                  // vars missing
  EXPECT_EQ(line_of("vars 2\nreq 3 = 0\n"), 2);          // variable out of range
  EXPECT_EQ(line_of("vars 2\n\nreq 1 = x\n"), 3);        // bad number
  EXPECT_EQ(line_of("vars 2\nfoo 1\n"), 2);              // unknown directive
  EXPECT_EQ(line_of("vars 2\nstates {5} = 0\n"), 2);     // state out of range
  EXPECT_EQ(line_of("vars 2\nexpect 1,2 = 0\n"), 2);     // wrong length
  EXPECT_EQ(line_of("vars 2\nvars 3\n"), 2);             // repeated header
}

TEST(ConstraintFile, MissingFile) {
  EXPECT_THROW(load_constraints("/nonexistent/file.blc"), Error);
}

}  // namespace
}  // namespace bornlp
