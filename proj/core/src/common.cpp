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

#include "bornlp/common.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace bornlp {

double shannon_bits(const Distribution& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(std::max(x, 1e-300));
  }
  return h;
}

double relative_entropy_bits(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw InvalidArgument("relative_entropy_bits: size mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return std::numeric_limits<double>::infinity();
    s += p[i] * std::log2(p[i] / q[i]);
  }
  return s;
}

Distribution validated_distribution(Distribution p, double tol) {
  double sum = 0.0;
  for (double& x : p) {
    if (x < -tol) {
      throw InvalidArgument("distribution has a negative entry");
    }
    if (x < 0.0) x = 0.0;
    sum += x;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw InvalidArgument("distribution does not sum to one (sum = " +
                          std::to_string(sum) + ")");
  }
  for (double& x : p) x /= sum;
  return p;
}

}  // namespace bornlp
