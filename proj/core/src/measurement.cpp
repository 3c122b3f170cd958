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

#include "bornlp/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace bornlp {

namespace {

double log2_dim(std::size_t d) { return std::log2(static_cast<double>(d)); }

double min_eigenvalue(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double max_eigenvalue(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(m.rows() - 1);
}

}  // namespace

HilbertPovm HilbertPovm::von_neumann(const Chart& chart) {
  chart.validate();
  HilbertPovm p;
  for (Eigen::Index k = 0; k < chart.unitary.cols(); ++k) {
    const CVector v = chart.unitary.col(k);
    p.elements.push_back(v * v.adjoint());
  }
  return p;
}

void HilbertPovm::validate() const {
  if (elements.empty()) throw InvalidArgument("POVM has no elements");
  const auto d = elements.front().rows();
  CMatrix total = CMatrix::Zero(d, d);
  for (const auto& q : elements) {
    if (q.rows() != d || q.cols() != d) throw InvalidArgument("POVM element size mismatch");
    if (hermitian_defect(q) > kTol.hermitian) {
      throw InvalidArgument("POVM element is not Hermitian");
    }
    if (min_eigenvalue(0.5 * (q + q.adjoint())) < -1e-9) {
      throw InvalidArgument("POVM element is not positive semidefinite");
    }
    total += q;
  }
  if ((total - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-8) {
    throw InvalidArgument("POVM elements do not sum to the identity");
  }
}

bool povm_independent(const HilbertPovm& p1, const HilbertPovm& p2) {
  p1.validate();
  p2.validate();
  if (p1.dim() != p2.dim()) throw InvalidArgument("POVM dimension mismatch");
  const double d = static_cast<double>(p1.dim());
  for (const auto& q1 : p1.elements) {
    for (const auto& q2 : p2.elements) {
      const Complex lhs = (q1 * q2).trace();
      const double rhs = q1.trace().real() * q2.trace().real() / d;
      if (std::abs(lhs - rhs) > 1e-8) return false;
    }
  }
  return true;
}

CMatrix independent_effect(const HilbertPovm& povm) {
  povm.validate();
  const auto d = static_cast<Eigen::Index>(povm.dim());
  const CMatrix id = CMatrix::Identity(d, d);
  // Orthonormal basis (Hilbert-Schmidt) of span{e_k}.
  std::vector<CMatrix> basis;
  auto project_out = [&basis](CMatrix m) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) m -= (b.adjoint() * m).trace() * b;
    }
    return m;
  };
  for (const auto& q : povm.elements) {
    const double t = q.trace().real();
    if (t <= 0.0) continue;
    CMatrix e = project_out(q / t - id / static_cast<double>(d));
    const double n = e.norm();
    if (n > 1e-10) basis.push_back(e / n);
  }
  // Candidate directions: generalized Gell-Mann matrices in a fixed order.
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = j; k < d; ++k) {
      for (int kind = 0; kind < 2; ++kind) {
        if (j == k && kind == 1) continue;
        CMatrix h = CMatrix::Zero(d, d);
        if (j == k) {
          if (j == d - 1) continue;
          h(j, j) = 1.0;
          h(d - 1, d - 1) = -1.0;
        } else if (kind == 0) {
          h(j, k) = 1.0;
          h(k, j) = 1.0;
        } else {
          h(j, k) = Complex(0.0, -1.0);
          h(k, j) = Complex(0.0, 1.0);
        }
        CMatrix e = project_out(h);
        e = 0.5 * (e + e.adjoint()).eval();
        if (e.norm() < 1e-8) continue;
        const double spread = std::max(std::abs(min_eigenvalue(e)), max_eigenvalue(e));
        return 0.5 * (id + e / spread);
      }
    }
  }
  throw Error("POVM is informationally complete; no independent effect exists");
}

PovmEntropy povm_entropy(const DensityOperator& rho, const HilbertPovm& povm) {
  povm.validate();
  if (povm.dim() != rho.dim()) throw InvalidArgument("POVM dimension mismatch");
  PovmEntropy out;
  const double n_bits = log2_dim(rho.dim());
  double rel = 0.0;
  for (const auto& q : povm.elements) {
    const double p = std::max(0.0, (rho.matrix() * q).trace().real());
    const double tq = q.trace().real();
    out.probabilities.push_back(p);
    if (p > 0.0) rel += p * std::log2(p / tq);
  }
  out.info_gain = n_bits + rel;
  out.entropy = n_bits - out.info_gain;
  if (out.entropy < von_neumann_entropy(rho) - 1e-9) {
    throw std::logic_error("POVM entropy fell below the von Neumann entropy");
  }
  return out;
}

EntropicBounds entropic_bounds(const DensityOperator& rho, const Chart& c1, const Chart& c2) {
  EntropicBounds b;
  b.h1 = shannon_bits(chart_distribution(rho, c1));
  b.h2 = shannon_bits(chart_distribution(rho, c2));
  const double delta = chart_overlap(c1, c2);
  b.maassen_uffink = std::max(0.0, -2.0 * std::log2(delta));
  b.frank_lieb = b.maassen_uffink + von_neumann_entropy(rho);
  const double total = b.h1 + b.h2;
  b.satisfied = total >= b.maassen_uffink - 1e-9 && total >= b.frank_lieb - 1e-9;
  return b;
}

ClusterEntropy cluster_entropy(const DensityOperator& rho, const std::vector<Chart>& charts) {
  if (charts.empty()) throw InvalidArgument("cluster_entropy: no charts");
  ClusterEntropy out;
  for (const auto& c : charts) {
    out.chart_entropies.push_back(shannon_bits(chart_distribution(rho, c)));
    out.sum += out.chart_entropies.back();
  }
  out.bound = static_cast<double>(charts.size() - 1) * log2_dim(rho.dim()) +
              von_neumann_entropy(rho);
  out.delta = out.sum - out.bound;
  return out;
}

double effect_probability(const DensityOperator& rho, const HermitianObservable& effect) {
  if (effect.dim() != rho.dim()) throw InvalidArgument("effect dimension mismatch");
  if (min_eigenvalue(effect.matrix()) < -1e-9 || max_eigenvalue(effect.matrix()) > 1.0 + 1e-9) {
    throw InvalidArgument("effect must satisfy 0 <= E <= 1");
  }
  return std::clamp((rho.matrix() * effect.matrix()).trace().real(), 0.0, 1.0);
}

Distribution induced_distribution(const DensityOperator& rho,
                                  const HermitianObservable& effect, const Chart& chart) {
  chart.validate();
  if (effect.dim() != rho.dim() || chart.dim() != rho.dim()) {
    throw InvalidArgument("induced_distribution: dimension mismatch");
  }
  const CMatrix e = chart.unitary.adjoint() * effect.matrix() * chart.unitary;
  const auto d = e.rows();
  Distribution q(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if (i != j && std::abs(e(i, j)) > 1e-9) {
        throw InvalidArgument("effect is not diagonal in the chart");
      }
    }
    q[i] = e(i, i).real();
    if (q[i] < -1e-9 || q[i] > 1.0 + 1e-9) {
      throw InvalidArgument("effect must satisfy 0 <= E <= 1");
    }
  }
  if (std::holds_alternative<SingularChart>(reverse_transcribe(rho, chart))) {
    throw InvalidArgument("induced_distribution: chart is singular for this state");
  }
  const auto w = chart_distribution(rho, chart);
  double norm = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) norm += q[k] * w[k];
  if (norm <= kTol.zero) throw InvalidArgument("effect has zero probability");
  Distribution h(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) h[k] = std::max(0.0, q[k] * w[k] / norm);
  return h;
}

}  // namespace bornlp
