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

#include "bornlp/registers.hpp"

#include <algorithm>
#include <cmath>

namespace bornlp {

void BipartiteSplit::validate() const {
  if (n_a < 1 || n_b < 1 || n_a + n_b > kMaxVars) {
    throw InvalidArgument("invalid bipartite split");
  }
}

Distribution product(const Distribution& w_a, const Distribution& w_b) {
  Distribution out(w_a.size() * w_b.size());
  for (std::size_t a = 0; a < w_a.size(); ++a) {
    for (std::size_t b = 0; b < w_b.size(); ++b) {
      out[a * w_b.size() + b] = w_a[a] * w_b[b];
    }
  }
  return out;
}

Distribution marginal(const Distribution& w_c, const BipartiteSplit& split, Side side) {
  split.validate();
  if (w_c.size() != split.d_c()) throw InvalidArgument("marginal: size mismatch");
  const std::size_t da = split.d_a();
  const std::size_t db = split.d_b();
  Distribution out(side == Side::kA ? da : db, 0.0);
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t b = 0; b < db; ++b) {
      out[side == Side::kA ? a : b] += w_c[a * db + b];
    }
  }
  return out;
}

double entanglement_relative_entropy(const Distribution& w_c,
                                     const BipartiteSplit& split) {
  const auto ref = product(marginal(w_c, split, Side::kA),
                           marginal(w_c, split, Side::kB));
  const double s = relative_entropy_bits(w_c, ref);
  if (!std::isfinite(s)) {
    throw Error("support of the joint escapes the product of its marginals");
  }
  return std::max(0.0, s);
}

double mutual_information(const Distribution& w_c, const BipartiteSplit& split) {
  return shannon_bits(marginal(w_c, split, Side::kA)) +
         shannon_bits(marginal(w_c, split, Side::kB)) - shannon_bits(w_c);
}

PartialSystem partial_lp_system(const Distribution& w_c, const BipartiteSplit& split,
                                Side side) {
  const auto w = validated_distribution(w_c);
  const auto other = marginal(w, split, side == Side::kA ? Side::kB : Side::kA);
  const std::size_t da = split.d_a();
  const std::size_t db = split.d_b();
  const std::size_t d_self = side == Side::kA ? da : db;

  std::vector<Distribution> conditionals;
  for (std::size_t o = 0; o < other.size(); ++o) {
    if (other[o] <= kTol.zero) continue;
    Distribution v(d_self);
    for (std::size_t s = 0; s < d_self; ++s) {
      const std::size_t idx = side == Side::kA ? s * db + o : o * db + s;
      v[s] = w[idx] / other[o];
    }
    conditionals.push_back(std::move(v));
  }
  const Register reg(side == Side::kA ? split.n_a : split.n_b);
  int rank = 0;
  auto system = span_system(reg, conditionals, &rank);
  auto state = make_state(system, SelectExplicit{marginal(w, split, side)});
  return PartialSystem{std::move(system), std::move(state), std::move(conditionals),
                       rank};
}

NonSignalingResult non_signaling_check(const std::vector<Distribution>& family,
                                       const BipartiteSplit& split, Side side,
                                       double tol) {
  NonSignalingResult res;
  if (family.size() < 2) return res;
  const auto ref = marginal(family.front(), split, side);
  for (std::size_t k = 1; k < family.size(); ++k) {
    const auto m = marginal(family[k], split, side);
    for (std::size_t i = 0; i < m.size(); ++i) {
      res.max_deviation = std::max(res.max_deviation, std::abs(m[i] - ref[i]));
    }
  }
  res.ok = res.max_deviation <= tol;
  return res;
}

Distribution purify(const QuantumStateReal& state, std::size_t d_b) {
  const auto& rep = state.simplex();
  if (d_b < rep.rank()) {
    throw InvalidArgument("purify: ancilla dimension " + std::to_string(d_b) +
                          " is smaller than the simplex rank " +
                          std::to_string(rep.rank()));
  }
  const std::size_t da = state.d();
  Distribution out(da * d_b, 0.0);
  for (std::size_t i = 0; i < rep.rank(); ++i) {
    for (std::size_t a = 0; a < da; ++a) {
      out[a * d_b + i] = rep.coords[i] * rep.vertices[i][a];
    }
  }
  return out;
}

}  // namespace bornlp
