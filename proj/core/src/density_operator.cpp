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

#include "bornlp/density_operator.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace bornlp {

double hermitian_defect(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void ordered_eigensystem(const CMatrix& h, Eigen::VectorXd& values, CMatrix& vectors) {
  const auto d = h.rows();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  if (es.info() != Eigen::Success) throw Error("eigendecomposition failed");
  values.resize(d);
  vectors.resize(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    values(i) = es.eigenvalues()(d - 1 - i);
    vectors.col(i) = es.eigenvectors().col(d - 1 - i);
  }

  // Deterministic basis inside each degenerate eigenspace.
  Eigen::Index start = 0;
  while (start < d) {
    Eigen::Index end = start + 1;
    while (end < d && std::abs(values(end) - values(start)) <= 1e-9) ++end;
    const Eigen::Index g = end - start;
    if (g > 1) {
      const CMatrix block = vectors.middleCols(start, g);
      const CMatrix proj = block * block.adjoint();
      CMatrix chosen(d, g);
      Eigen::Index found = 0;
      std::vector<char> used(d, 0);
      while (found < g) {
        Eigen::Index best = -1;
        double best_norm = 0.0;
        CVector best_vec;
        for (Eigen::Index k = 0; k < d; ++k) {
          if (used[k]) continue;
          CVector v = proj.col(k);
          for (Eigen::Index j = 0; j < found; ++j) {
            v -= chosen.col(j).dot(v) * chosen.col(j);
          }
          const double n = v.norm();
          if (n > best_norm + 1e-12) {
            best = k;
            best_norm = n;
            best_vec = v;
          }
        }
        if (best < 0) break;
        used[best] = 1;
        chosen.col(found++) = best_vec / best_norm;
      }
      if (found == g) vectors.middleCols(start, g) = chosen;
    }
    start = end;
  }

  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index k = 0; k < d; ++k) {
      const Complex c = vectors(k, i);
      if (std::abs(c) > 1e-10) {
        vectors.col(i) *= std::conj(c) / std::abs(c);
        vectors(k, i) = Complex(std::abs(c), 0.0);
        break;
      }
    }
  }
}

DensityOperator::DensityOperator(CMatrix matrix) : matrix_(std::move(matrix)) {
  const auto d = matrix_.rows();
  if (d == 0 || matrix_.cols() != d) {
    throw InvalidArgument("density operator must be a nonempty square matrix");
  }
  if (static_cast<std::size_t>(d) > kMaxHilbertDim) {
    throw InvalidArgument("density operator dimension exceeds 256");
  }
  if (hermitian_defect(matrix_) > kTol.hermitian) {
    throw InvalidArgument("density operator is not Hermitian");
  }
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint()).eval();
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > kTol.hermitian) {
    throw InvalidArgument("density operator trace is " + std::to_string(tr));
  }
  matrix_ /= tr;
  ordered_eigensystem(matrix_, spectrum_, eigenbasis_);
  if (spectrum_(d - 1) < -kTol.hermitian) {
    throw InvalidArgument("density operator has a negative eigenvalue " +
                          std::to_string(spectrum_(d - 1)));
  }
  spectrum_ = spectrum_.cwiseMax(0.0);
  spectrum_ /= spectrum_.sum();
  rank_ = 0;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (spectrum_(i) > kTol.eig) ++rank_;
  }
}

DensityOperator DensityOperator::pure(const CVector& psi) {
  const double n = psi.norm();
  if (n == 0.0) throw InvalidArgument("pure state vector is zero");
  const CVector u = psi / n;
  return DensityOperator(u * u.adjoint());
}

DensityOperator DensityOperator::diagonal(const Distribution& p) {
  const auto q = validated_distribution(p);
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(q.size()),
                            static_cast<Eigen::Index>(q.size()));
  for (std::size_t i = 0; i < q.size(); ++i) m(i, i) = q[i];
  return DensityOperator(std::move(m));
}

HermitianObservable::HermitianObservable(CMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw InvalidArgument("observable must be a nonempty square matrix");
  }
  const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
  if (hermitian_defect(matrix_) > kTol.hermitian * scale) {
    throw InvalidArgument("observable is not Hermitian");
  }
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint()).eval();
}

Chart Chart::identity(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return Chart{CMatrix::Identity(n, n), "identity"};
}

void Chart::validate() const {
  if (unitary.rows() == 0 || unitary.rows() != unitary.cols()) {
    throw InvalidArgument("chart matrix must be square");
  }
  const auto d = unitary.rows();
  const double err =
      (unitary.adjoint() * unitary - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (err > 1e-9) throw InvalidArgument("chart matrix is not unitary");
}

CMatrix in_chart(const DensityOperator& rho, const Chart& chart) {
  if (chart.dim() != rho.dim()) throw InvalidArgument("chart dimension mismatch");
  return chart.unitary.adjoint() * rho.matrix() * chart.unitary;
}

Distribution chart_distribution(const DensityOperator& rho, const Chart& chart) {
  const CMatrix m = in_chart(rho, chart);
  Distribution w(rho.dim());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::max(0.0, m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real());
  }
  return validated_distribution(w);
}

CMatrix partial_trace(const CMatrix& m, std::size_t d_a, std::size_t d_b, Side keep) {
  const auto da = static_cast<Eigen::Index>(d_a);
  const auto db = static_cast<Eigen::Index>(d_b);
  if (m.rows() != da * db || m.cols() != da * db) {
    throw InvalidArgument("partial_trace: dimension mismatch");
  }
  if (keep == Side::kA) {
    CMatrix out = CMatrix::Zero(da, da);
    for (Eigen::Index a = 0; a < da; ++a) {
      for (Eigen::Index a2 = 0; a2 < da; ++a2) {
        Complex s = 0.0;
        for (Eigen::Index b = 0; b < db; ++b) s += m(a * db + b, a2 * db + b);
        out(a, a2) = s;
      }
    }
    return out;
  }
  CMatrix out = CMatrix::Zero(db, db);
  for (Eigen::Index b = 0; b < db; ++b) {
    for (Eigen::Index b2 = 0; b2 < db; ++b2) {
      Complex s = 0.0;
      for (Eigen::Index a = 0; a < da; ++a) s += m(a * db + b, a * db + b2);
      out(b, b2) = s;
    }
  }
  return out;
}

double von_neumann_entropy(const DensityOperator& rho) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < rho.spectrum().size(); ++i) {
    const double l = rho.spectrum()(i);
    if (l > kTol.eig) s -= l * std::log2(l);
  }
  return s;
}

}  // namespace bornlp
