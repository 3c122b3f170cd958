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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

namespace bornlp::testing {
namespace {

// Solves M x = r exactly. Returns false unless the solution is unique.
bool solve_unique(std::vector<std::vector<Rational>> m, std::vector<Rational> r,
                  std::vector<Rational>& x) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c].numerator() == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    std::swap(r[p], r[rank]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c].numerator() == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[rank][k];
      r[i] -= f * r[rank];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i) {
    if (r[i].numerator() != 0) return false;  // inconsistent
  }
  if (rank != cols) return false;  // not unique
  x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = r[i] / m[i][pivot_col[i]];
  return true;
}

std::complex<double> complex_normal(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

}  // namespace

std::vector<Distribution> rational_vertices(int n_vars, const std::vector<RationalRow>& rows) {
  const std::size_t d = std::size_t{1} << n_vars;
  std::vector<RationalRow> all{{std::vector<Rational>(d, Rational(1)), Rational(1)}};
  all.insert(all.end(), rows.begin(), rows.end());

  std::vector<std::vector<Rational>> found;
  for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < d; ++j) {
      if ((mask >> j) & 1U) support.push_back(j);
    }
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> r;
    for (const auto& row : all) {
      std::vector<Rational> restricted;
      for (auto j : support) restricted.push_back(row.a[j]);
      m.push_back(std::move(restricted));
      r.push_back(row.b);
    }
    std::vector<Rational> x;
    if (!solve_unique(m, r, x)) continue;
    if (std::any_of(x.begin(), x.end(), [](const Rational& v) { return v.numerator() <= 0; })) continue;
    std::vector<Rational> full(d, Rational(0));
    for (std::size_t k = 0; k < support.size(); ++k) full[support[k]] = x[k];
    found.push_back(std::move(full));
  }
  std::sort(found.begin(), found.end(), std::greater<>());
  std::vector<Distribution> out;
  for (const auto& v : found) {
    Distribution p;
    for (const auto& q : v) p.push_back(boost::rational_cast<double>(q));
    out.push_back(std::move(p));
  }
  return out;
}

Distribution grid_maxent(const LinearSystem& system, int grid, int rounds) {
  const Eigen::Index d = system.a.cols();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system.a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd p0 = svd.solve(system.b);
  const double tol = 1e-10 * std::max(1.0, svd.singularValues().maxCoeff());
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > tol) ++rank;
  }
  const Eigen::MatrixXd null = svd.matrixV().rightCols(d - rank);
  const auto k = static_cast<std::size_t>(null.cols());

  auto entropy_at = [&](const Eigen::VectorXd& t, Distribution& p) {
    const Eigen::VectorXd x = p0 + null * t;
    p.assign(x.data(), x.data() + d);
    double h = 0.0;
    for (double& v : p) {
      if (v < -1e-13) return -std::numeric_limits<double>::infinity();
      v = std::max(v, 0.0);
      if (v > 0) h -= v * std::log2(v);
    }
    return h;
  };

  Distribution best_p;
  Eigen::VectorXd center = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(k));
  double best = entropy_at(center, best_p);
  double half = 1.0;
  std::size_t points = 1;
  for (std::size_t i = 0; i < k; ++i) points *= static_cast<std::size_t>(grid);
  Distribution p;
  for (int round = 0; round < rounds && k > 0; ++round) {
    Eigen::VectorXd next = center;
    for (std::size_t idx = 0; idx < points; ++idx) {
      Eigen::VectorXd t(static_cast<Eigen::Index>(k));
      std::size_t rem = idx;
      for (std::size_t j = 0; j < k; ++j) {
        const auto g = static_cast<double>(rem % static_cast<std::size_t>(grid));
        rem /= static_cast<std::size_t>(grid);
        t(static_cast<Eigen::Index>(j)) =
            center(static_cast<Eigen::Index>(j)) - half + 2 * half * g / (grid - 1);
      }
      const double h = entropy_at(t, p);
      if (h > best) {
        best = h;
        best_p = p;
        next = t;
      }
    }
    center = next;
    half *= 0.6;
  }
  if (!std::isfinite(best)) return {};
  const double s = std::accumulate(best_p.begin(), best_p.end(), 0.0);
  for (double& v : best_p) v /= s;
  return best_p;
}

Distribution brute_marginal(const Distribution& w, int n_a, int n_b, Side side) {
  const std::size_t da = std::size_t{1} << n_a;
  const std::size_t db = std::size_t{1} << n_b;
  Distribution out(side == Side::kA ? da : db, 0.0);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      out[side == Side::kA ? i : j] += w[i * db + j];
    }
  }
  return out;
}

double brute_chsh_max() {
  double best = 0.0;
  for (int a0 : {-1, 1}) {
    for (int a1 : {-1, 1}) {
      for (int b0 : {-1, 1}) {
        for (int b1 : {-1, 1}) {
          best = std::max(best, std::abs(double(a0 * b0 + a1 * b0 + a0 * b1 - a1 * b1)));
        }
      }
    }
  }
  return best;
}

Distribution dirichlet(Rng& rng, std::size_t n, double alpha) {
  std::gamma_distribution<double> g(alpha, 1.0);
  Distribution out(n);
  double s = 0.0;
  for (double& v : out) s += (v = g(rng));
  for (double& v : out) v /= s;
  return out;
}

LinearSystem random_system(Rng& rng, int n_vars, int extra_rows) {
  const Register reg(n_vars);
  const auto interior = dirichlet(rng, reg.dim());
  std::uniform_int_distribution<int> entry(-1, 1);
  std::vector<LinearEquation> rows;
  for (int r = 0; r < extra_rows; ++r) {
    Covector q{std::vector<double>(reg.dim())};
    for (double& v : q.entries) v = entry(rng);
    rows.push_back(LinearEquation{q, q.apply(interior)});
  }
  return build_system(reg, rows);
}

QuantumStateReal random_state(Rng& rng, int n_vars) {
  const int d = 1 << n_vars;
  std::uniform_int_distribution<int> extra(0, std::min(d - 2, 3));
  const auto system = random_system(rng, n_vars, extra(rng));
  const auto poly = enumerate_vertices(system);
  return make_state(system, poly, SelectVertexWeights{dirichlet(rng, poly.vertices.size())});
}

CMatrix haar_unitary(Rng& rng, std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  CMatrix z(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) z(i, j) = complex_normal(rng);
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

DensityOperator random_density(Rng& rng, std::size_t d, std::size_t rank) {
  CMatrix g(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(rank));
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = complex_normal(rng);
  }
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityOperator(rho);
}

HilbertPovm random_povm(Rng& rng, std::size_t d, std::size_t outcomes) {
  const auto n = static_cast<Eigen::Index>(d);
  std::vector<CMatrix> g;
  CMatrix s = CMatrix::Zero(n, n);
  for (std::size_t k = 0; k < outcomes; ++k) {
    CMatrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) a(i, j) = complex_normal(rng);
    }
    g.push_back(a * a.adjoint());
    s += g.back();
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(s);
  const CMatrix inv_sqrt = es.eigenvectors() *
                           es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                           es.eigenvectors().adjoint();
  HilbertPovm povm;
  for (const auto& gk : g) {
    CMatrix q = inv_sqrt * gk * inv_sqrt;
    povm.elements.push_back(0.5 * (q + q.adjoint()));
  }
  return povm;
}

}  // namespace bornlp::testing
