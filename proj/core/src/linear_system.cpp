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

#include "bornlp/linear_system.hpp"

#include <algorithm>
#include <cmath>

#include "bornlp/detail/simplex.hpp"

namespace bornlp {

double LinearSystem::residual(const Distribution& p) const {
  if (p.size() != d()) throw InvalidArgument("distribution size mismatch");
  const Eigen::Map<const Eigen::VectorXd> x(p.data(), p.size());
  return (a * x - b).cwiseAbs().maxCoeff();
}

namespace {

LinearSystem reduce(const Register& reg,
                    const std::vector<LinearEquation>& rows,
                    const std::vector<int>& labels) {
  const auto d = static_cast<Eigen::Index>(reg.dim());
  double maxabs = 0.0;
  for (const auto& r : rows) {
    for (double v : r.a.entries) maxabs = std::max(maxabs, std::abs(v));
  }
  const double eps_rank = kTol.rank_rel * std::max(maxabs, 1.0);

  Eigen::MatrixXd a(static_cast<Eigen::Index>(rows.size()), d);
  Eigen::VectorXd b(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].a.size() != reg.dim()) {
      throw InvalidArgument("row length does not match register dimension");
    }
    a.row(k) = Eigen::Map<const Eigen::RowVectorXd>(rows[k].a.entries.data(), d);
    b(k) = rows[k].b;
  }
  int bad = -1;
  const auto kept = detail::independent_rows(a, b, eps_rank, kTol.lin, &bad);
  if (bad >= 0) {
    throw InfeasibleError(
        labels[bad] < 0 ? std::string("normalization row is inconsistent")
                        : "constraint " + std::to_string(labels[bad] + 1) +
                              " contradicts the preceding constraints",
        labels[bad]);
  }

  LinearSystem sys{reg, Eigen::MatrixXd(kept.size(), d),
                   Eigen::VectorXd(kept.size()), {}};
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const auto& r = rows[kept[i]];
    sys.a.row(i) = Eigen::Map<const Eigen::RowVectorXd>(r.a.entries.data(), d);
    sys.b(i) = r.b;
    sys.source.push_back(labels[kept[i]]);
  }
  return sys;
}

}  // namespace

LinearSystem build_system(const Register& reg,
                          const std::vector<ConstraintSpec>& constraints) {
  auto rows = universal_equations(reg);
  std::vector<int> labels(rows.size(), -1);
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    try {
      rows.push_back(requirement_to_lineq(reg, constraints[k]));
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("constraint " + std::to_string(k + 1) + ": " + e.what());
    }
    labels.push_back(static_cast<int>(k));
  }
  try {
    return reduce(reg, rows, labels);
  } catch (const InfeasibleError& e) {
    const int k = e.constraint();
    if (k < 0 || constraints[k].source_line <= 0) throw;
    throw InfeasibleError("line " + std::to_string(constraints[k].source_line) + ": " +
                              e.what(),
                          k);
  }
}

LinearSystem build_system(const Register& reg,
                          const std::vector<LinearEquation>& equations) {
  auto rows = universal_equations(reg);
  std::vector<int> labels(rows.size(), -1);
  for (std::size_t k = 0; k < equations.size(); ++k) {
    rows.push_back(equations[k]);
    labels.push_back(static_cast<int>(k));
  }
  return reduce(reg, rows, labels);
}

LinearSystem span_system(const Register& reg,
                         const std::vector<Distribution>& vectors,
                         int* rank) {
  const auto d = static_cast<Eigen::Index>(reg.dim());
  if (vectors.empty()) throw InvalidArgument("span_system: no vectors");
  Eigen::MatrixXd v(static_cast<Eigen::Index>(vectors.size()), d);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != reg.dim()) {
      throw InvalidArgument("span_system: vector size mismatch");
    }
    v.row(i) = Eigen::Map<const Eigen::RowVectorXd>(vectors[i].data(), d);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(v, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > kTol.rank_rel * s(0)) ++r;
  }
  if (rank != nullptr) *rank = r;
  std::vector<LinearEquation> rows;
  for (Eigen::Index k = r; k < d; ++k) {
    Eigen::VectorXd c = svd.matrixV().col(k);
    // Snap round-off so rational spans produce clean rows.
    for (Eigen::Index j = 0; j < d; ++j) {
      if (std::abs(c(j)) < 1e-14) c(j) = 0.0;
    }
    rows.push_back({Covector{std::vector<double>(c.data(), c.data() + d)}, 0.0});
  }
  return build_system(reg, rows);
}

std::optional<Distribution> feasible_point(const LinearSystem& system) {
  const auto bfs = detail::phase_one(system.a, system.b, kTol.lin);
  if (!bfs) return std::nullopt;
  Distribution p(bfs->x.data(), bfs->x.data() + bfs->x.size());
  if (system.residual(p) > 1e-7) return std::nullopt;
  return p;
}

bool feasible(const LinearSystem& system) {
  return feasible_point(system).has_value();
}

}  // namespace bornlp
