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

#include <array>
#include <numbers>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bornlp/bipartite.hpp"
#include "bornlp/charts.hpp"
#include "bornlp/constraint_file.hpp"
#include "bornlp/measurement.hpp"
#include "bornlp/real_state.hpp"
#include "bornlp/transcription.hpp"

namespace bornlp {

enum class Relation { kEqual, kAtLeast, kAtMost };

/// One verified quantity of a report.
struct Check {
  std::string name;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::kEqual;

  bool passed() const;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct NamedMatrix {
  std::string name;
  CMatrix matrix;
};

struct ScenarioReport {
  std::string scenario;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Check> checks;
  std::vector<Table> tables;
  std::vector<NamedMatrix> matrices;
  std::vector<std::string> notes;
  std::optional<std::uint64_t> seed;
  std::string prng;

  bool all_passed() const;
};

enum class Party { kA, kB };

struct ScenarioParams {
  std::optional<double> theta;        ///< qubit_mub
  double theta1 = 0.0;                ///< epr
  double theta2 = std::numbers::pi / 3.0;         ///< epr
  std::size_t samples = 1'000'000;    ///< epr
  std::uint64_t seed = 20260417;
  Party first = Party::kA;            ///< epr: whose setting fixes the gauge
  int box_a = 0;                      ///< prbox
  int box_b = 0;                      ///< prbox
  double phi = 0.0;                   ///< singlet gauge phase
  std::optional<Distribution> mu;     ///< one_bit weights
};

/// Names accepted by run_scenario.
const std::vector<std::string>& scenario_names();

/// Runs a named worked example. Throws InvalidArgument for unknown names.
ScenarioReport run_scenario(const std::string& name, const ScenarioParams& params = {});

struct SolveOptions {
  Selection selection = SelectMaxEnt{};
  bool mub_analysis = true;
};

/// Full pipeline on a constraint file: system, polytope, state,
/// transcription, canonical chart and MUB cluster analysis.
ScenarioReport run_constraint_file(const std::filesystem::path& path,
                                   const SolveOptions& options = {});
ScenarioReport run_constraints(const ConstraintFile& file, const SolveOptions& options,
                               const std::string& label);

// -- Worked-example building blocks ---------------------------------------

std::vector<ConstraintSpec> singlet_constraints();
std::vector<ConstraintSpec> triplet_constraints();
std::vector<ConstraintSpec> prbox_constraints();

/// Qubit system whose unique solution is (cos^2(t/2), sin^2(t/2)).
LinearSystem qubit_system(double theta);

/// Real EPR state on the triplet polytope with weights
/// mu_1 = mu_2 = cos^2(t/2) / 2, mu_3 = sin^2(t/2), t = theta1 - theta2.
QuantumStateReal epr_state(double theta1, double theta2);

/// (1/4)(1 - c, 1 + c, 1 + c, 1 - c) with c = cos(theta1 - theta2).
Distribution epr_distribution(double theta1, double theta2);

/// E = sum_x w_x (2 x1 - 1)(2 x2 - 1) for a two-bit distribution.
double spin_correlator(const Distribution& w);

struct EprSimResult {
  Distribution empirical;
  Distribution analytic;
  std::vector<double> standard_error;  ///< binomial, per entry
  double inf_distance = 0.0;
  double max_z = 0.0;                  ///< max_i |empirical - analytic| / se_i
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Classical-communication protocol: the hidden variable is drawn from
/// (1/4)|cos(lambda - phi)| where phi is the setting of the first party,
/// then X1 = [1 + sgn cos(theta1 - lambda)]/2, X2 = [1 - sgn cos(theta2 - lambda)]/2.
EprSimResult epr_protocol_sim(double theta1, double theta2, std::size_t samples,
                              std::uint64_t seed, Party first = Party::kA);

/// Settings (a, a') for A and (b, b') for B.
struct ChshSettings {
  double a0 = 0.0;
  double a1 = std::numbers::pi / 2.0;
  double b0 = std::numbers::pi / 4.0;
  double b1 = -std::numbers::pi / 4.0;
};

struct ChshEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  std::array<double, 4> correlators{};  ///< (a,b), (a',b), (a,b'), (a',b')
};

/// E(a,b) + E(a',b) + E(a,b') - E(a',b') from the analytic distribution.
ChshEstimate epr_chsh_analytic(const ChshSettings& s);
/// Same combination estimated by the protocol, one run per setting pair.
ChshEstimate epr_chsh_sim(const ChshSettings& s, std::size_t samples, std::uint64_t seed,
                          Party first = Party::kA);

/// <S_AB> + <S_A'B> + <S_AB'> - <S_A'B'> via the Born rule.
double chsh_value(const DensityOperator& rho, const std::array<HermitianObservable, 4>& obs);

/// Largest |CHSH| over the 16 deterministic local strategies, each evaluated
/// through chsh_value on a product basis state.
double deterministic_chsh_max();

/// Permutation unitary taking the (0,0) box state to the (c,d) box state:
/// x3 ^= c, x4 ^= d, x2 ^= c & d.
CMatrix prbox_unitary(int c, int d);
/// The diagonal CHSH base observable S in natural state order.
HermitianObservable prbox_observable();

}  // namespace bornlp
