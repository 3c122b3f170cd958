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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bornlp {

/// Probability vector over the classical states of a register.
using Distribution = std::vector<double>;

/// Numerical tolerances shared by every module.
struct Tolerances {
  double zero = 1e-9;        ///< entries below this count as zero
  double lin = 1e-9;         ///< residual of Ap = b
  double dedupe = 1e-7;      ///< vertex identity
  double opt = 1e-7;         ///< maxent dual/primal agreement
  double eig = 1e-10;        ///< eigenvalues treated as zero
  double hermitian = 1e-9;   ///< ||rho - rho^dag||_max
  double nonsignal = 1e-9;   ///< marginal invariance
  double rank_rel = 1e-10;   ///< rank threshold relative to max |a_ij|
};

inline constexpr Tolerances kTol{};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when the equality constraints are contradictory or the polytope
/// is empty. `constraint` is the index into the user's constraint list,
/// or -1 for the normalization row / unspecified.
class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, int constraint = -1)
      : Error(what), constraint_(constraint) {}
  int constraint() const noexcept { return constraint_; }

 private:
  int constraint_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Shannon entropy in bits with the convention 0 log 0 = 0.
double shannon_bits(const Distribution& p);

/// Kullback-Leibler divergence sum p log2(p/q); +inf if p is not dominated by q.
double relative_entropy_bits(const Distribution& p, const Distribution& q);

/// Checks that `p` is a probability vector. Renormalizes silently when the
/// sum is within `tol` of one and throws InvalidArgument otherwise.
Distribution validated_distribution(Distribution p, double tol = kTol.zero);

}  // namespace bornlp
