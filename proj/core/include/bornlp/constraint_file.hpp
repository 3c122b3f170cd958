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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bornlp/boolean.hpp"

namespace bornlp {

/// Parsed contents of a constraint file.
///
/// Format, one directive per line, `#` starts a comment:
///
///     vars 2
///     req 1,2 = 0          # P(x1 and x2) = 0
///     req 1 = req -2       # P(x1) = P(not x2)
///     states {1,4} = 1/2   # p1 + p4 = 1/2, states are 1-based
///     expect 1,0,0,-1 = 0  # <q, p> = 0 with d entries
///
/// Numbers may be integers, decimals or rationals `a/b`.
struct ConstraintFile {
  int n_vars = 0;
  std::vector<ConstraintSpec> constraints;
};

ConstraintFile parse_constraints(std::string_view text);
ConstraintFile load_constraints(const std::filesystem::path& path);

/// Parses a number, integer, decimal or `a/b`. Throws InvalidArgument.
double parse_number(std::string_view token);

}  // namespace bornlp
