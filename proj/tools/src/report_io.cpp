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

#include "report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace bornlp::cli {
namespace {

using nlohmann::ordered_json;

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::kEqual: return "eq";
    case Relation::kAtLeast: return "ge";
    case Relation::kAtMost: return "le";
  }
  return "eq";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string decimal(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string report_json(const ScenarioReport& report) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["scenario"] = report.scenario;
  ordered_json inputs = ordered_json::object();
  for (const auto& [k, v] : report.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  j["seed"] = report.seed ? ordered_json(*report.seed) : ordered_json(nullptr);
  j["prng"] = report.prng.empty() ? ordered_json(nullptr) : ordered_json(report.prng);
  j["passed"] = report.all_passed();

  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"expected", decimal(c.expected)},
                      {"observed", decimal(c.observed)},
                      {"tolerance", decimal(c.tolerance)},
                      {"relation", relation_name(c.relation)},
                      {"passed", c.passed()}});
  }
  j["checks"] = checks;

  ordered_json tables = ordered_json::array();
  for (const auto& t : report.tables) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : t.rows) {
      ordered_json row = ordered_json::array();
      for (double x : r) row.push_back(decimal(x));
      rows.push_back(row);
    }
    tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", rows}});
  }
  j["tables"] = tables;

  ordered_json matrices = ordered_json::array();
  for (const auto& m : report.matrices) {
    matrices.push_back({{"name", m.name}, {"data", ordered_json::parse(matrix_json(m.matrix))}});
  }
  j["matrices"] = matrices;
  j["notes"] = report.notes;
  j["entropy_unit"] = "bits";
  return j.dump(2) + "\n";
}

std::string report_csv(const ScenarioReport& report) {
  std::ostringstream os;
  os << "kind,name,row,column,value\n";
  for (const auto& c : report.checks) {
    const std::string name = csv_field(c.name);
    os << "check," << name << ",0,expected," << decimal(c.expected) << "\n";
    os << "check," << name << ",0,observed," << decimal(c.observed) << "\n";
    os << "check," << name << ",0,tolerance," << decimal(c.tolerance) << "\n";
    os << "check," << name << ",0,relation," << relation_name(c.relation) << "\n";
    os << "check," << name << ",0,passed," << (c.passed() ? 1 : 0) << "\n";
  }
  for (const auto& t : report.tables) {
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      for (std::size_t k = 0; k < t.rows[i].size(); ++k) {
        const std::string col = k < t.columns.size() ? t.columns[k] : std::to_string(k);
        os << "table," << csv_field(t.name) << "," << i << "," << csv_field(col) << ","
           << decimal(t.rows[i][k]) << "\n";
      }
    }
  }
  return os.str();
}

std::string report_text(const ScenarioReport& report) {
  std::ostringstream os;
  os << "scenario " << report.scenario;
  for (const auto& [k, v] : report.inputs) os << "  " << k << "=" << v;
  if (report.seed) os << "  seed=" << *report.seed << " (" << report.prng << ")";
  os << "\n";
  for (const auto& c : report.checks) {
    os << (c.passed() ? "PASS " : "FAIL ") << c.name << ": observed " << decimal(c.observed)
       << ", expected " << relation_name(c.relation) << " " << decimal(c.expected)
       << " tol " << decimal(c.tolerance) << "\n";
  }
  for (const auto& n : report.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string matrix_json(const CMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      row.push_back({m(i, k).real(), m(i, k).imag()});
    }
    rows.push_back(row);
  }
  return rows.dump();
}

CMatrix parse_matrix_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("matrix JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw InvalidArgument("matrix JSON: expected rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw InvalidArgument("matrix JSON: ragged rows");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const auto& z = row[static_cast<std::size_t>(k)];
      if (!z.is_array() || z.size() != 2) throw InvalidArgument("matrix JSON: expected [re, im]");
      m(i, k) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << content;
}

}  // namespace bornlp::cli
