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

#include "bornlp/charts.hpp"

#include <bit>
#include <cmath>

namespace bornlp {

Chart canonical_chart(const DensityOperator& rho) {
  return Chart{rho.eigenbasis(), "canonical"};
}

ReverseTranscription reverse_transcribe(const DensityOperator& rho, const Chart& chart) {
  chart.validate();
  const std::size_t d = rho.dim();
  if (chart.dim() != d) throw InvalidArgument("chart dimension mismatch");
  if (!std::has_single_bit(d) || d < 2) {
    throw InvalidArgument("reverse transcription needs a dimension 2^N");
  }
  const Register reg(std::countr_zero(d));

  const CMatrix e = chart.unitary.adjoint() * rho.eigenbasis();
  std::vector<Distribution> v;
  for (int i = 0; i < rho.rank(); ++i) {
    Distribution vi(d);
    for (std::size_t k = 0; k < d; ++k) {
      vi[k] = std::norm(e(static_cast<Eigen::Index>(k), i));
    }
    v.push_back(std::move(vi));
  }
  int span_rank = 0;
  const auto system = span_system(reg, v, &span_rank);
  if (span_rank < rho.rank()) return SingularChart{span_rank, rho.rank()};

  auto w = chart_distribution(rho, chart);
  // The diagonal lies in the span exactly; project away round-off so the
  // explicit selection passes the residual check.
  Eigen::Map<Eigen::VectorXd> wv(w.data(), static_cast<Eigen::Index>(d));
  if (system.m() > 1) {
    const Eigen::MatrixXd c = system.a.bottomRows(system.m() - 1);
    const Eigen::VectorXd corr =
        c.transpose() * (c * c.transpose()).ldlt().solve(c * wv);
    Eigen::VectorXd fixed = wv - corr;
    for (Eigen::Index k = 0; k < fixed.size(); ++k) wv(k) = std::max(0.0, fixed(k));
    wv /= wv.sum();
  }
  return make_state(system, SelectExplicit{w});
}

namespace {

// Arithmetic in GF(2^N) with elements as bit masks of polynomial coefficients.
struct GaloisField {
  int n;
  unsigned poly;  // including the x^n term

  unsigned mul(unsigned a, unsigned b) const {
    unsigned r = 0;
    for (int i = 0; i < n; ++i) {
      if ((b >> i) & 1U) r ^= a << i;
    }
    for (int i = 2 * n - 2; i >= n; --i) {
      if ((r >> i) & 1U) r ^= poly << (i - n);
    }
    return r;
  }

  // Absolute trace y + y^2 + ... + y^(2^(n-1)), which lies in GF(2).
  unsigned trace(unsigned y) const {
    unsigned s = 0;
    unsigned t = y;
    for (int k = 0; k < n; ++k) {
      s ^= t;
      t = mul(t, t);
    }
    return s;
  }
};

}  // namespace

std::vector<Chart> mub_cluster(int n_vars) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex i_unit(0.0, 1.0);
  if (n_vars == 1) {
    CMatrix u2(2, 2);
    u2 << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
    CMatrix u3(2, 2);
    u3 << inv_sqrt2, inv_sqrt2, i_unit * inv_sqrt2, -i_unit * inv_sqrt2;
    return {Chart::identity(2), Chart{u2, "mub_1"}, Chart{u3, "mub_2"}};
  }
  if (n_vars != 2 && n_vars != 3) {
    throw InvalidArgument("mub_cluster supports N = 1, 2, 3");
  }
  const GaloisField gf{n_vars, n_vars == 2 ? 0b111U : 0b1011U};
  const int d = 1 << n_vars;
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  const Complex powers[4] = {1.0, i_unit, -1.0, -i_unit};

  std::vector<Chart> out{Chart::identity(static_cast<std::size_t>(d))};
  for (int alpha = 0; alpha < d; ++alpha) {
    // Symmetric binary form M[i][j] = tr(alpha x^i x^j) in the polynomial basis.
    std::vector<std::vector<int>> form(n_vars, std::vector<int>(n_vars));
    for (int i = 0; i < n_vars; ++i) {
      for (int j = 0; j < n_vars; ++j) {
        form[i][j] = static_cast<int>(
            gf.trace(gf.mul(static_cast<unsigned>(alpha), gf.mul(1U << i, 1U << j))));
      }
    }
    CMatrix u(d, d);
    for (int x = 0; x < d; ++x) {
      // Big-endian bits of x, matching the register convention.
      std::vector<int> xv(n_vars);
      for (int k = 0; k < n_vars; ++k) xv[k] = (x >> (n_vars - 1 - k)) & 1;
      int quad = 0;
      for (int i = 0; i < n_vars; ++i) {
        for (int j = 0; j < n_vars; ++j) quad += xv[i] * form[i][j] * xv[j];
      }
      for (int c = 0; c < d; ++c) {
        int dot = 0;
        for (int k = 0; k < n_vars; ++k) dot += xv[k] * ((c >> (n_vars - 1 - k)) & 1);
        u(x, c) = norm * powers[quad % 4] * (dot % 2 == 0 ? 1.0 : -1.0);
      }
    }
    out.push_back(Chart{u, "mub_" + std::to_string(alpha + 1)});
  }
  return out;
}

double chart_overlap(const Chart& c1, const Chart& c2) {
  if (c1.dim() != c2.dim()) throw InvalidArgument("chart dimension mismatch");
  return (c1.unitary.adjoint() * c2.unitary).cwiseAbs().maxCoeff();
}

Chart rotation_chart(double t) {
  CMatrix u(2, 2);
  u << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return Chart{u, "rotation"};
}

}  // namespace bornlp
