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

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bornlp/registers.hpp"

namespace bornlp {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr std::size_t kMaxHilbertDim = 256;

/// Density operator with its spectral decomposition computed at
/// construction. Eigenvalues are sorted in descending order; inside a
/// degenerate eigenspace the basis is obtained by pivoted Gram-Schmidt on the
/// projections of the canonical basis vectors; the first nonzero component
/// of every eigenvector is real and positive.
class DensityOperator {
 public:
  /// Validates hermiticity (1e-9), unit trace (1e-9) and positivity
  /// (eigenvalues >= -1e-9, then clamped to zero and renormalized).
  explicit DensityOperator(CMatrix matrix);

  static DensityOperator pure(const CVector& psi);
  static DensityOperator diagonal(const Distribution& p);

  const CMatrix& matrix() const noexcept { return matrix_; }
  const Eigen::VectorXd& spectrum() const noexcept { return spectrum_; }
  const CMatrix& eigenbasis() const noexcept { return eigenbasis_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  int rank() const noexcept { return rank_; }

 private:
  CMatrix matrix_;
  Eigen::VectorXd spectrum_;
  CMatrix eigenbasis_;
  int rank_ = 0;
};

/// Hermitian eigendecomposition with the conventions of DensityOperator.
void ordered_eigensystem(const CMatrix& h, Eigen::VectorXd& values, CMatrix& vectors);

class HermitianObservable {
 public:
  explicit HermitianObservable(CMatrix matrix);
  const CMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }

 private:
  CMatrix matrix_;
};

/// Orthonormal basis of the Hilbert space: column k of `unitary` is the
/// k-th chart basis vector expressed in the reference basis.
struct Chart {
  CMatrix unitary;
  std::string label;

  static Chart identity(std::size_t d);
  /// Throws InvalidArgument unless U^dag U = 1 within 1e-9.
  void validate() const;
  std::size_t dim() const noexcept { return static_cast<std::size_t>(unitary.rows()); }
};

/// Matrix of rho in the chart basis, U^dag rho U.
CMatrix in_chart(const DensityOperator& rho, const Chart& chart);

/// Diagonal of U^dag rho U: the working distribution seen from the chart.
Distribution chart_distribution(const DensityOperator& rho, const Chart& chart);

/// Partial trace of an operator on C^{d_a} (x) C^{d_b} (A-major indices),
/// keeping `keep`.
CMatrix partial_trace(const CMatrix& m, std::size_t d_a, std::size_t d_b, Side keep);

double von_neumann_entropy(const DensityOperator& rho);

/// Hermitian part check helper: max |m - m^dag|.
double hermitian_defect(const CMatrix& m);

}  // namespace bornlp
