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

#include "bornlp/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bornlp/detail/simplex.hpp"

namespace bornlp {

bool same_point(const Distribution& x, const Distribution& y, double tol) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - y[i]) > tol) return false;
  }
  return true;
}

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r > 1e18L ? UINT64_MAX : static_cast<std::uint64_t>(r + 0.5L);
}

// Advances `c` to the next k-combination of {0..n-1}; false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

void add_vertex(std::vector<Distribution>& out, const LinearSystem& sys,
                const std::vector<int>& basis, const Eigen::VectorXd& xb) {
  for (Eigen::Index i = 0; i < xb.size(); ++i) {
    if (xb(i) < -kTol.zero) return;
  }
  Distribution p(sys.d(), 0.0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const double v = xb(static_cast<Eigen::Index>(k));
    p[basis[k]] = std::abs(v) < kTol.zero ? 0.0 : v;
  }
  if (sys.residual(p) > 1e-7) return;
  for (const auto& q : out) {
    if (same_point(p, q, kTol.dedupe)) return;
  }
  out.push_back(std::move(p));
}

bool lex_greater(const Distribution& x, const Distribution& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i] - y[i]) > kTol.zero) return x[i] > y[i];
  }
  return false;
}

int hull_dimension(const std::vector<Distribution>& vs) {
  if (vs.size() <= 1) return 0;
  const auto d = static_cast<Eigen::Index>(vs.front().size());
  Eigen::MatrixXd diff(static_cast<Eigen::Index>(vs.size() - 1), d);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    for (Eigen::Index j = 0; j < d; ++j) diff(i - 1, j) = vs[i][j] - vs[0][j];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diff);
  const auto& s = svd.singularValues();
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > 1e-9 * std::max(1.0, s(0))) ++r;
  }
  return r;
}

}  // namespace

Polytope enumerate_vertices(const LinearSystem& system,
                            const VertexOptions& options) {
  const int m = system.m();
  const int d = static_cast<int>(system.d());
  const auto start = detail::phase_one(system.a, system.b, kTol.lin);
  if (!start) throw InfeasibleError("the specific polytope is empty");

  VertexStrategy strategy = options.strategy;
  if (strategy == VertexStrategy::kAuto) {
    strategy = binomial(d, m) <= options.exhaustive_limit
                   ? VertexStrategy::kExhaustive
                   : VertexStrategy::kPivot;
  }

  std::vector<Distribution> found;
  if (strategy == VertexStrategy::kExhaustive) {
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = i;
    do {
      if (auto xb = detail::basic_solution(system.a, system.b, basis)) {
        add_vertex(found, system, basis, *xb);
      }
    } while (next_combination(basis, d));
  } else {
    auto basis = start->basis;
    if (static_cast<int>(basis.size()) != m) {
      // Rank-deficient start cannot happen for a reduced system.
      throw Error("pivot enumeration needs a full-rank starting basis");
    }
    for (const auto& b : detail::feasible_bases(system.a, system.b, basis,
                                                1e-11, options.basis_limit)) {
      if (auto xb = detail::basic_solution(system.a, system.b, b)) {
        add_vertex(found, system, b, *xb);
      }
    }
  }
  if (found.empty()) throw InfeasibleError("the specific polytope is empty");

  std::sort(found.begin(), found.end(), lex_greater);
  Polytope poly;
  poly.affine_dim = hull_dimension(found);
  poly.vertices = std::move(found);
  poly.m = m;
  return poly;
}

Distribution SimplicialRepresentation::point() const {
  Distribution p(vertices.empty() ? 0 : vertices.front().size(), 0.0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) p[j] += coords[i] * vertices[i][j];
  }
  return p;
}

SimplicialRepresentation caratheodory(const Polytope& polytope,
                                      const Distribution& anchor) {
  const auto k = static_cast<Eigen::Index>(polytope.vertices.size());
  const auto d = static_cast<Eigen::Index>(polytope.d());
  if (k == 0) throw InvalidArgument("caratheodory: empty polytope");
  if (static_cast<Eigen::Index>(anchor.size()) != d) {
    throw InvalidArgument("caratheodory: anchor size mismatch");
  }
  Eigen::MatrixXd a(d + 1, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) a(j, i) = polytope.vertices[i][j];
    a(d, i) = 1.0;
  }
  Eigen::VectorXd b(d + 1);
  for (Eigen::Index j = 0; j < d; ++j) b(j) = anchor[j];
  b(d) = 1.0;

  const auto bfs = detail::phase_one(a, b, kTol.lin);
  if (!bfs) throw InvalidArgument("caratheodory: anchor lies outside the polytope");

  std::vector<int> support;
  for (int j : bfs->basis) {
    if (bfs->x(j) > kTol.zero) support.push_back(j);
  }
  if (support.empty()) throw InvalidArgument("caratheodory: degenerate anchor");

  // Refine the weights on the chosen support by least squares.
  Eigen::MatrixXd as(d + 1, static_cast<Eigen::Index>(support.size()));
  for (std::size_t i = 0; i < support.size(); ++i) as.col(i) = a.col(support[i]);
  Eigen::VectorXd mu = as.colPivHouseholderQr().solve(b);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    mu(i) = std::max(mu(i), 0.0);
    sum += mu(i);
  }
  mu /= sum;

  SimplicialRepresentation rep;
  for (std::size_t i = 0; i < support.size(); ++i) {
    rep.vertices.push_back(polytope.vertices[support[i]]);
    rep.coords.push_back(mu(static_cast<Eigen::Index>(i)));
  }
  if (!same_point(rep.point(), anchor, 1e-8)) {
    throw InvalidArgument("caratheodory: anchor lies outside the polytope");
  }
  return rep;
}

CentroidEstimate centroid(const Polytope& polytope,
                          const CentroidOptions& options) {
  const auto& vs = polytope.vertices;
  if (vs.empty()) throw InvalidArgument("centroid: empty polytope");
  const std::size_t d = vs.front().size();
  CentroidEstimate est;
  est.point.assign(d, 0.0);
  est.standard_error.assign(d, 0.0);

  if (polytope.is_simplicial()) {
    for (const auto& v : vs) {
      for (std::size_t j = 0; j < d; ++j) est.point[j] += v[j];
    }
    for (double& x : est.point) x /= static_cast<double>(vs.size());
    return est;
  }

  // Orthonormal coordinates on the affine hull, then rejection sampling
  // inside the bounding box of the vertices.
  const int k = polytope.affine_dim;
  Eigen::MatrixXd diff(static_cast<Eigen::Index>(vs.size() - 1),
                       static_cast<Eigen::Index>(d));
  for (std::size_t i = 1; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) diff(i - 1, j) = vs[i][j] - vs[0][j];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diff, Eigen::ComputeThinV);
  const Eigen::MatrixXd basis = svd.matrixV().leftCols(k);
  const Eigen::Map<const Eigen::VectorXd> origin(vs[0].data(), d);

  Eigen::VectorXd lo = Eigen::VectorXd::Constant(k, 0.0);
  Eigen::VectorXd hi = Eigen::VectorXd::Constant(k, 0.0);
  for (const auto& v : vs) {
    const Eigen::Map<const Eigen::VectorXd> x(v.data(), d);
    const Eigen::VectorXd y = basis.transpose() * (x - origin);
    lo = lo.cwiseMin(y);
    hi = hi.cwiseMax(y);
  }

  std::mt19937_64 rng(options.seed);
  const auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
  Eigen::VectorXd sumsq = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
  std::size_t accepted = 0;
  const std::size_t max_attempts = options.samples * 10'000;
  Eigen::VectorXd y(k);
  for (std::size_t attempt = 0;
       accepted < options.samples && attempt < max_attempts; ++attempt) {
    for (int i = 0; i < k; ++i) y(i) = lo(i) + (hi(i) - lo(i)) * uniform();
    const Eigen::VectorXd p = origin + basis * y;
    if (p.minCoeff() < 0.0) continue;
    sum += p;
    sumsq += p.cwiseProduct(p);
    ++accepted;
  }
  if (accepted < 2) throw Error("centroid: rejection sampling accepted too few points");
  const double n = static_cast<double>(accepted);
  for (std::size_t j = 0; j < d; ++j) {
    const double mean = sum(j) / n;
    const double var = std::max(0.0, sumsq(j) / n - mean * mean);
    est.point[j] = mean;
    est.standard_error[j] = std::sqrt(var / (n - 1.0));
  }
  est.exact = false;
  est.samples = accepted;
  est.seed = options.seed;
  return est;
}

}  // namespace bornlp
