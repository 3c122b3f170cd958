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

#include <iosfwd>
#include <string>

#include "bornlp/scenarios.hpp"

namespace bornlp::cli {

inline constexpr int kSchemaVersion = 1;

/// Decimal string with 12 significant digits; "inf", "-inf", "nan" otherwise.
std::string decimal(double x);

std::string report_json(const ScenarioReport& report);
std::string report_csv(const ScenarioReport& report);
/// One line per check plus notes, for terminals.
std::string report_text(const ScenarioReport& report);

/// Row-major array of [re, im] pairs.
std::string matrix_json(const CMatrix& m);
CMatrix parse_matrix_json(const std::string& text);

/// Writes to `path`, or to stdout when path is "-".
void write_output(const std::string& path, const std::string& content);

}  // namespace bornlp::cli
