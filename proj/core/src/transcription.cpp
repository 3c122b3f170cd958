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

#include "bornlp/transcription.hpp"

#include <cmath>
#include <stdexcept>

namespace bornlp {

namespace {

void check_phases(const std::vector<Complex>& phases, std::size_t n) {
  if (phases.empty()) return;
  if (phases.size() != n) {
    throw InvalidArgument("gauge has " + std::to_string(phases.size()) +
                          " phases, expected " + std::to_string(n));
  }
  for (const auto& z : phases) {
    if (std::abs(std::abs(z) - 1.0) > 1e-9) {
      throw InvalidArgument("gauge phases must have unit modulus");
    }
  }
}

}  // namespace

CVector pure_amplitudes(const Distribution& w, const Gauge& gauge) {
  const auto p = validated_distribution(w);
  check_phases(gauge.phases, p.size());
  CVector a(static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Complex phase = gauge.phases.empty() ? Complex(1.0) : gauge.phases[i];
    a(static_cast<Eigen::Index>(i)) = std::sqrt(p[i]) * phase;
  }
  return a;
}

DensityOperator transcribe_pure(const Distribution& w, const Gauge& gauge) {
  if (gauge.ancilla_permutation || gauge.ancilla_dim) {
    throw InvalidArgument("pure transcription takes no ancilla gauge");
  }
  const CVector a = pure_amplitudes(w, gauge);
  return DensityOperator(a * a.adjoint());
}

DensityOperator transcribe_mixed(const QuantumStateReal& state, const Gauge& gauge) {
  const auto& rep = state.simplex();
  const std::size_t r = rep.rank();
  const std::size_t d = state.d();
  const std::size_t db = gauge.ancilla_dim.value_or(r);
  if (db < r) {
    throw InvalidArgument("gauge ancilla dimension is smaller than the simplex rank");
  }
  std::vector<std::size_t> perm(r);
  for (std::size_t i = 0; i < r; ++i) perm[i] = i;
  if (gauge.ancilla_permutation) {
    perm = *gauge.ancilla_permutation;
    if (perm.size() != r) throw InvalidArgument("ancilla permutation has wrong length");
    std::vector<char> seen(db, 0);
    for (std::size_t k : perm) {
      if (k >= db || seen[k]) throw InvalidArgument("ancilla permutation is not injective");
      seen[k] = 1;
    }
  }
  check_phases(gauge.phases, d * db);

  const auto wc = purify(state, r);
  CMatrix c = CMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(db));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t b = perm[i];
      const Complex phase = gauge.phases.empty() ? Complex(1.0) : gauge.phases[a * db + b];
      c(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          std::sqrt(std::max(0.0, wc[a * r + i])) * phase;
    }
  }
  // Tr_b |c><c| with c viewed as a d x d_b matrix is c c^dag.
  return DensityOperator(c * c.adjoint());
}

HermitianObservable diagonal_observable(const Covector& q) {
  const auto n = static_cast<Eigen::Index>(q.size());
  CMatrix m = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = q.entries[i];
  return HermitianObservable(std::move(m));
}

double born_expectation(const DensityOperator& rho, const HermitianObservable& obs) {
  if (obs.dim() != rho.dim()) throw InvalidArgument("observable dimension mismatch");
  const Complex t = (rho.matrix() * obs.matrix()).trace();
  const double scale = std::max(1.0, obs.matrix().cwiseAbs().maxCoeff());
  if (std::abs(t.imag()) > 1e-9 * scale) {
    throw std::logic_error("Born expectation has an imaginary residue");
  }
  return t.real();
}

DensityOperator apply_channel(const DensityOperator& rho, const std::vector<CMatrix>& kraus) {
  if (kraus.empty()) throw InvalidArgument("channel needs at least one Kraus operator");
  const auto d = static_cast<Eigen::Index>(rho.dim());
  CMatrix completeness = CMatrix::Zero(d, d);
  for (const auto& k : kraus) {
    if (k.cols() != d || k.rows() != d) {
      throw InvalidArgument("Kraus operator dimension mismatch");
    }
    completeness += k.adjoint() * k;
  }
  if ((completeness - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-8) {
    throw InvalidArgument("Kraus operators are not complete");
  }
  CMatrix out = CMatrix::Zero(d, d);
  for (const auto& k : kraus) out += k * rho.matrix() * k.adjoint();
  out /= out.trace().real();
  return DensityOperator(std::move(out));
}

}  // namespace bornlp
