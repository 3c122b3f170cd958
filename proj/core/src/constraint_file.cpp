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

#include "bornlp/constraint_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace bornlp {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

long long parse_integer(std::string_view tok) {
  tok = trim(tok);
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw InvalidArgument("expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

double parse_plain(std::string_view tok) {
  tok = trim(tok);
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() ||
      !std::isfinite(v)) {
    throw InvalidArgument("expected a number, got '" + std::string(tok) + "'");
  }
  return v;
}

std::vector<Literal> parse_literals(std::string_view s) {
  std::vector<Literal> lits;
  if (trim(s).empty()) return lits;
  for (auto tok : split(s, ',')) {
    lits.push_back(static_cast<Literal>(parse_integer(tok)));
  }
  return lits;
}

}  // namespace

double parse_number(std::string_view token) {
  token = trim(token);
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return parse_plain(token);
  const auto num = token.substr(0, slash);
  const auto den = token.substr(slash + 1);
  const bool integral = num.find_first_of(".eE") == std::string_view::npos &&
                        den.find_first_of(".eE") == std::string_view::npos;
  double n = 0.0;
  double d = 0.0;
  if (integral) {
    n = static_cast<double>(parse_integer(num));
    d = static_cast<double>(parse_integer(den));
  } else {
    n = parse_plain(num);
    d = parse_plain(den);
  }
  if (d == 0.0) throw InvalidArgument("division by zero in '" + std::string(token) + "'");
  return n / d;
}

ConstraintFile parse_constraints(std::string_view text) {
  ConstraintFile out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto sp = line.find_first_of(" \t");
    const auto keyword = line.substr(0, sp);
    const auto rest = sp == std::string_view::npos ? std::string_view{}
                                                   : trim(line.substr(sp));
    try {
      if (keyword == "vars") {
        if (out.n_vars != 0) throw InvalidArgument("duplicate 'vars' header");
        const auto n = parse_integer(rest);
        Register check(static_cast<int>(n));
        out.n_vars = check.n_vars();
        continue;
      }
      if (out.n_vars == 0) {
        throw InvalidArgument("'vars N' header must come first");
      }
      const Register reg(out.n_vars);
      const auto eq = rest.find('=');
      if (eq == std::string_view::npos) throw InvalidArgument("missing '='");
      const auto lhs = trim(rest.substr(0, eq));
      const auto rhs = trim(rest.substr(eq + 1));

      ConstraintSpec spec;
      spec.source_line = line_no;
      if (keyword == "req") {
        if (rhs.starts_with("req")) {
          spec.body = RequirementEquality{parse_literals(lhs),
                                          parse_literals(trim(rhs.substr(3)))};
        } else {
          spec.body = RequirementProb{parse_literals(lhs), parse_number(rhs)};
        }
      } else if (keyword == "states") {
        if (lhs.size() < 2 || lhs.front() != '{' || lhs.back() != '}') {
          throw InvalidArgument("state list must be written {i,j,...}");
        }
        StateSum s;
        const auto inner = trim(lhs.substr(1, lhs.size() - 2));
        if (!inner.empty()) {
          for (auto tok : split(inner, ',')) {
            const auto k = parse_integer(tok);
            if (k < 1 || static_cast<std::size_t>(k) > reg.dim()) {
              throw InvalidArgument("state " + std::to_string(k) +
                                    " out of range 1.." +
                                    std::to_string(reg.dim()));
            }
            s.states.push_back(static_cast<std::size_t>(k - 1));
          }
        }
        s.rhs = parse_number(rhs);
        spec.body = std::move(s);
      } else if (keyword == "expect") {
        CovectorExpectation e;
        for (auto tok : split(lhs, ',')) {
          e.covector.entries.push_back(parse_number(tok));
        }
        e.rhs = parse_number(rhs);
        spec.body = std::move(e);
      } else {
        throw InvalidArgument("unknown directive '" + std::string(keyword) + "'");
      }
      // Validate literals and sizes eagerly so errors carry the line number.
      (void)requirement_to_lineq(reg, spec);
      out.constraints.push_back(std::move(spec));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (out.n_vars == 0) throw ParseError("missing 'vars N' header", line_no);
  return out;
}

ConstraintFile load_constraints(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open constraint file " + path.string());
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_constraints(buf.str());
}

}  // namespace bornlp
