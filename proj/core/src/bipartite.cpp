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

#include "bornlp/bipartite.hpp"

#include <cmath>
#include <limits>

namespace bornlp {

namespace {

void check_split(const DensityOperator& rho, const BipartiteSplit& split) {
  split.validate();
  if (rho.dim() != split.d_c()) throw InvalidArgument("state dimension does not match split");
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

DensityOperator reduced_state(const DensityOperator& rho_c, const BipartiteSplit& split,
                              Side keep) {
  check_split(rho_c, split);
  return DensityOperator(partial_trace(rho_c.matrix(), split.d_a(), split.d_b(), keep));
}

ConditionalEntropy conditional_entropy(const DensityOperator& rho_c,
                                       const BipartiteSplit& split) {
  const auto rho_b = reduced_state(rho_c, split, Side::kB);
  ConditionalEntropy out;
  out.value = von_neumann_entropy(rho_c) - von_neumann_entropy(rho_b);
  out.negative = out.value < -1e-9;
  return out;
}

RelativeEntropy quantum_relative_entropy(const DensityOperator& rho,
                                         const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) throw InvalidArgument("relative entropy: dimension mismatch");
  RelativeEntropy out;
  const auto& ls = sigma.spectrum();
  const CMatrix& vs = sigma.eigenbasis();
  double cross = 0.0;  // Tr rho log2 sigma
  for (Eigen::Index k = 0; k < ls.size(); ++k) {
    const CVector v = vs.col(k);
    const double weight = (v.adjoint() * rho.matrix() * v)(0, 0).real();
    if (ls(k) > kTol.eig) {
      cross += weight * std::log2(ls(k));
    } else if (weight > 1e-9) {
      out.support_violation = true;
    }
  }
  if (out.support_violation) {
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  out.value = std::max(0.0, -von_neumann_entropy(rho) - cross);
  return out;
}

RelativeEntropy entanglement_entropy(const DensityOperator& rho_c,
                                     const BipartiteSplit& split) {
  const auto ra = reduced_state(rho_c, split, Side::kA);
  const auto rb = reduced_state(rho_c, split, Side::kB);
  return quantum_relative_entropy(rho_c, DensityOperator(kron(ra.matrix(), rb.matrix())));
}

DiscordResult quantum_discord(const DensityOperator& rho_c, const BipartiteSplit& split,
                              const std::vector<HilbertPovm>& family_b) {
  check_split(rho_c, split);
  if (family_b.empty()) throw InvalidArgument("quantum_discord: empty POVM family");
  const auto da = static_cast<Eigen::Index>(split.d_a());
  const double cond = conditional_entropy(rho_c, split).value;
  const CMatrix id_a = CMatrix::Identity(da, da);

  DiscordResult out;
  out.value = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < family_b.size(); ++k) {
    const auto& povm = family_b[k];
    povm.validate();
    if (povm.dim() != split.d_b()) throw InvalidArgument("POVM does not act on the B factor");
    double avg = 0.0;
    for (const auto& q : povm.elements) {
      const CMatrix post =
          partial_trace(rho_c.matrix() * kron(id_a, q), split.d_a(), split.d_b(), Side::kA);
      const double p = post.trace().real();
      if (p <= 1e-14) continue;
      CMatrix cond_state = post / p;
      cond_state = 0.5 * (cond_state + cond_state.adjoint()).eval();
      avg += p * von_neumann_entropy(DensityOperator(cond_state));
    }
    const double v = avg - cond;
    out.per_measurement.push_back(v);
    if (v > out.value) {
      out.value = v;
      out.best = k;
    }
  }
  return out;
}

std::vector<HilbertPovm> default_discord_family(const BipartiteSplit& split) {
  std::vector<HilbertPovm> out;
  for (const auto& c : mub_cluster(split.n_b)) out.push_back(HilbertPovm::von_neumann(c));
  return out;
}

}  // namespace bornlp
