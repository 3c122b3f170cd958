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

#include "bornlp/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "bornlp/registers.hpp"

namespace bornlp {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kExact = 1e-12;
constexpr const char* kPrng = "mt19937_64";

Check check(std::string name, double expected, double observed, double tol,
            Relation rel = Relation::kEqual) {
  return Check{std::move(name), expected, observed, tol, rel};
}

double inf_distance(const Distribution& x, const Distribution& y) {
  double out = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) out = std::max(out, std::abs(x[i] - y[i]));
  return out;
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

double binary_entropy(double p) { return shannon_bits({p, 1.0 - p}); }

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Distribution of variable `var` (1-based) under w.
Distribution variable_marginal(const Register& reg, const Distribution& w, int var) {
  Distribution out(2, 0.0);
  for (std::size_t s = 0; s < w.size(); ++s) out[reg.bit(s, var)] += w[s];
  return out;
}

CMatrix diagonal_matrix(const std::vector<double>& d) {
  CMatrix m = CMatrix::Zero(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Distribution real_diagonal(const CMatrix& m) {
  Distribution out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) out[i] = m(i, i).real();
  return out;
}

std::vector<double> row_of(const Distribution& w) { return {w.begin(), w.end()}; }

Table distribution_table(std::string name, const std::vector<Distribution>& rows) {
  Table t{std::move(name), {}, {}};
  if (!rows.empty()) {
    for (std::size_t j = 0; j < rows.front().size(); ++j) {
      t.columns.push_back("w" + std::to_string(j + 1));
    }
  }
  for (const auto& r : rows) t.rows.push_back(row_of(r));
  return t;
}

// -- one_bit -----------------------------------------------------------------

ScenarioReport one_bit(const ScenarioParams& params) {
  ScenarioReport rep;
  rep.scenario = "one_bit";
  const Distribution mu = params.mu.value_or(Distribution{0.5, 0.5});
  rep.inputs.push_back({"mu", fmt(mu.at(0)) + "," + fmt(mu.at(1))});

  const Register reg(1);
  const auto system = build_system(reg, std::vector<ConstraintSpec>{});
  const auto poly = enumerate_vertices(system);
  rep.checks.push_back(check("rank m", 1, system.m(), 0));
  rep.checks.push_back(check("vertex count", 2, static_cast<double>(poly.vertices.size()), 0));

  const auto state = make_state(system, poly, SelectVertexWeights{mu});
  const double p = state.working()[0];
  rep.checks.push_back(check("working w1", mu[0], p, kExact));

  const auto rho = transcribe_mixed(state);
  const CMatrix diag = diagonal_matrix({p, 1.0 - p});
  rep.checks.push_back(check("rho = diag(w)", 0, max_abs(rho.matrix() - diag), kExact));
  rep.checks.push_back(
      check("S(rho)", binary_entropy(p), von_neumann_entropy(rho), 1e-9));
  rep.checks.push_back(
      check("chart entropy", binary_entropy(p), chart_entropy(state), 1e-9));
  rep.checks.push_back(check("simplicial entropy", binary_entropy(p),
                             simplicial_entropy(state), 1e-9));

  const auto z = HermitianObservable(diagonal_matrix({1.0, -1.0}));
  rep.checks.push_back(
      check("<Z> Born", 2 * p - 1, born_expectation(rho, z), kExact));
  rep.checks.push_back(check("<Z> real", 2 * p - 1,
                             expectation(state, Covector{{1.0, -1.0}}), kExact));

  const auto purified = purify(state, 2);
  const Distribution expect_pure{p, 0.0, 0.0, 1.0 - p};
  rep.checks.push_back(check("purification", 0, inf_distance(purified, expect_pure), kExact));
  rep.tables.push_back(distribution_table("vertices", poly.vertices));
  rep.tables.push_back(distribution_table("working", {state.working()}));
  rep.matrices.push_back({"rho", rho.matrix()});
  return rep;
}


// -- qubit_mub ---------------------------------------------------------------

std::array<Distribution, 3> qubit_chart_formulas(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {Distribution{0.5 * (1 + c), 0.5 * (1 - c)},
          Distribution{0.5 * (1 + s), 0.5 * (1 - s)}, Distribution{0.5, 0.5}};
}

Distribution qubit_system_solution(double theta) {
  return make_state(qubit_system(theta), SelectMaxEnt{}).working();
}

ScenarioReport qubit_mub(const ScenarioParams& params) {
  ScenarioReport rep;
  rep.scenario = "qubit_mub";
  const double theta = params.theta.value_or(kPi / 4);
  rep.inputs.push_back({"theta", fmt(theta)});

  const auto cluster = mub_cluster(1);
  const auto system = qubit_system(theta);
  const auto state = make_state(system, SelectMaxEnt{});
  const double ch = std::cos(theta / 2);
  const double sh = std::sin(theta / 2);
  rep.checks.push_back(check("working", 0,
                             inf_distance(state.working(), {ch * ch, sh * sh}), kExact));
  rep.checks.push_back(check("pure", 1, is_pure(state) ? 1 : 0, 0));

  const auto rho = transcribe_pure(state.working());
  CMatrix expect_rho(2, 2);
  expect_rho << ch * ch, ch * sh, ch * sh, sh * sh;
  rep.checks.push_back(check("rho_theta", 0, max_abs(rho.matrix() - expect_rho),
                             kExact));
  rep.checks.push_back(check("<Z> = cos(theta)", std::cos(theta),
                             born_expectation(rho, HermitianObservable(
                                                       diagonal_matrix({1.0, -1.0}))),
                             kExact));

  // Theta grid.
  Table grid{"theta_grid", {"theta", "w1_1", "w2_1", "w3_1", "H1", "H2", "H3", "delta_H"}, {}};
  double formula_err = 0.0;
  double h3_err = 0.0;
  for (int k = 0; k <= 12; ++k) {
    const double t = k * kPi / 12;
    const auto r = transcribe_pure(qubit_system_solution(t));
    const auto expect = qubit_chart_formulas(t);
    std::vector<double> row{t};
    for (std::size_t c = 0; c < 3; ++c) {
      const auto w = chart_distribution(r, cluster[c]);
      formula_err = std::max(formula_err, inf_distance(w, expect[c]));
      row.push_back(w[0]);
    }
    const auto ce = cluster_entropy(r, cluster);
    row.insert(row.end(), ce.chart_entropies.begin(), ce.chart_entropies.end());
    row.push_back(ce.delta);
    h3_err = std::max(h3_err, std::abs(ce.chart_entropies[2] - 1.0));
    grid.rows.push_back(std::move(row));
  }
  rep.tables.push_back(std::move(grid));
  rep.checks.push_back(check("chart formulas on grid", 0, formula_err, kExact));
  rep.checks.push_back(check("H3 = 1 on grid", 0, h3_err, kExact));

  const auto zero = cluster_entropy(transcribe_pure(qubit_system_solution(0.0)), cluster);
  rep.checks.push_back(check("theta=0 H1", 0, zero.chart_entropies[0], kExact));
  rep.checks.push_back(check("theta=0 H2", 1, zero.chart_entropies[1], kExact));
  rep.checks.push_back(check("theta=0 H3", 1, zero.chart_entropies[2], kExact));
  rep.checks.push_back(check("theta=0 delta_H", 0, zero.delta, kExact));

  const auto ce = cluster_entropy(rho, cluster);
  const double formula_sum = binary_entropy(0.5 * (1 + std::cos(theta))) +
                             binary_entropy(0.5 * (1 + std::sin(theta))) + 1.0;
  rep.checks.push_back(check("entropy sum vs formulas", formula_sum, ce.sum, kExact));
  rep.checks.push_back(check("cluster bound", ce.bound, ce.sum, 1e-9,
                             Relation::kAtLeast));
  if (std::abs(theta - kPi / 4) < 1e-12) {
    rep.notes.push_back("entropy sum at theta=pi/4 from the binary-entropy formulas is " +
                        fmt(formula_sum) + " bits; the rounded figure 2.125 does not "
                        "follow from them, checks use the formulas");
  }

  const auto mu = entropic_bounds(rho, cluster[0], cluster[1]);
  rep.checks.push_back(check("Maassen-Uffink", mu.maassen_uffink, mu.h1 + mu.h2, 1e-9, Relation::kAtLeast));

  const auto canon = canonical_chart(rho);
  rep.checks.push_back(check("canonical chart entropy", 0,
                             shannon_bits(chart_distribution(rho, canon)), 1e-9));
  const auto back = reverse_transcribe(rho, cluster[0]);
  if (const auto* s = std::get_if<QuantumStateReal>(&back)) {
    rep.checks.push_back(check("reverse transcription", 0,
                               inf_distance(s->working(), state.working()), 1e-9));
  } else {
    rep.checks.push_back(check("reverse transcription", 0, 1, 1e-9));
  }

  Table charts{"charts", {"chart", "w_1", "w_2", "H"}, {}};
  for (std::size_t c = 0; c < cluster.size(); ++c) {
    const auto w = chart_distribution(rho, cluster[c]);
    charts.rows.push_back({static_cast<double>(c + 1), w[0], w[1], ce.chart_entropies[c]});
  }
  rep.tables.push_back(std::move(charts));
  rep.matrices.push_back({"rho", rho.matrix()});
  for (const auto& c : cluster) rep.matrices.push_back({"U_" + c.label, c.unitary});
  return rep;
}

// -- singlet -----------------------------------------------------------------

ScenarioReport singlet(const ScenarioParams& params) {
  ScenarioReport rep;
  rep.scenario = "singlet";
  rep.inputs.push_back({"phi", fmt(params.phi)});

  const Register reg(2);
  const auto system = build_system(reg, singlet_constraints());
  const auto poly = enumerate_vertices(system);
  const auto state = make_state(system, poly, SelectMaxEnt{});
  const Distribution expect{0.0, 0.5, 0.5, 0.0};
  rep.checks.push_back(check("working", 0, inf_distance(state.working(), expect), kExact));
  rep.checks.push_back(check("vertex count", 1, static_cast<double>(poly.vertices.size()),
                             0));
  rep.checks.push_back(check("pure", 1, is_pure(state) ? 1 : 0, 0));
  rep.checks.push_back(check("chart entropy", 1, chart_entropy(state), kExact));
  rep.checks.push_back(
      check("simplicial entropy", 0, simplicial_entropy(state), kExact));

  const auto rho = transcribe_mixed(state);
  rep.checks.push_back(check("rank rho", 1, rho.rank(), 0));

  const Complex phase = -std::polar(1.0, params.phi);
  const auto rho_g = transcribe_pure(state.working(), Gauge{{1.0, 1.0, phase, 1.0}, {}, {}});
  CVector psi = CVector::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = phase / std::sqrt(2.0);
  rep.checks.push_back(check("gauge to (|01> - e^{i phi}|10>)/sqrt2", 0,
                             max_abs(rho_g.matrix() - psi * psi.adjoint()), kExact));
  const HermitianObservable zz(diagonal_matrix({1.0, -1.0, -1.0, 1.0}));
  rep.checks.push_back(check("<ZZ>", -1, born_expectation(rho_g, zz), kExact));

  const BipartiteSplit split{1, 1};
  rep.checks.push_back(check("real entanglement entropy", 1,
                             entanglement_relative_entropy(state.working(), split), 1e-9));
  rep.checks.push_back(check("mutual information", 1,
                             mutual_information(state.working(), split), 1e-9));
  const auto part = partial_lp_system(state.working(), split, Side::kA);
  rep.checks.push_back(check("partial state", 0,
                             inf_distance(part.state.working(), {0.5, 0.5}), kExact));

  rep.checks.push_back(check("S(rho_A)", 1,
                             von_neumann_entropy(reduced_state(rho_g, split, Side::kA)),
                             1e-9));
  rep.checks.push_back(check("conditional entropy", -1,
                             conditional_entropy(rho_g, split).value, 1e-9));
  rep.checks.push_back(check("quantum entanglement entropy", 2,
                             entanglement_entropy(rho_g, split).value, 1e-9));

  const auto discord = quantum_discord(rho_g, split, default_discord_family(split));
  Table dt{"discord", {"povm", "value"}, {}};
  for (std::size_t i = 0; i < discord.per_measurement.size(); ++i) {
    dt.rows.push_back({static_cast<double>(i), discord.per_measurement[i]});
  }
  rep.tables.push_back(distribution_table("working", {state.working()}));
  rep.tables.push_back(std::move(dt));
  rep.matrices.push_back({"rho_natural", rho.matrix()});
  rep.matrices.push_back({"rho_gauged", rho_g.matrix()});
  return rep;
}

// -- triplet -----------------------------------------------------------------

ScenarioReport triplet(const ScenarioParams& params) {
  ScenarioReport rep;
  rep.scenario = "triplet";
  rep.seed = params.seed;
  rep.prng = kPrng;

  const auto system = build_system(Register(2), triplet_constraints());
  const auto poly = enumerate_vertices(system);
  const std::vector<Distribution> expect{
      {0.5, 0.0, 0.0, 0.5}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}};
  double vdist = poly.vertices.size() == expect.size() ? 0.0 : 1.0;
  for (std::size_t i = 0; i < std::min(expect.size(), poly.vertices.size()); ++i) {
    vdist = std::max(vdist, inf_distance(poly.vertices[i], expect[i]));
  }
  rep.checks.push_back(check("rank m", 2, system.m(), 0));
  rep.checks.push_back(check("vertices", 0, vdist, 1e-9));
  rep.checks.push_back(check("affine dimension", 2, poly.affine_dim, 0));

  CentroidOptions copt;
  copt.seed = params.seed;
  const auto cen = make_state(system, poly, SelectCentroid{copt});
  rep.checks.push_back(check("centroid", 0,
                             inf_distance(cen.working(), {1.0 / 6, 1.0 / 3, 1.0 / 3, 1.0 / 6}),
                             kExact));
  const auto me = make_state(system, poly, SelectMaxEnt{});
  rep.checks.push_back(check("maxent", 0,
                             inf_distance(me.working(), {0.25, 0.25, 0.25, 0.25}), 1e-9));
  rep.checks.push_back(check("maxent entropy", 2, chart_entropy(me), 1e-9));
  rep.checks.push_back(check("centroid simplicial entropy", std::log2(3.0),
                             simplicial_entropy(cen), 1e-9));

  const auto rho = transcribe_mixed(cen);
  rep.checks.push_back(check("S(rho) <= S_mu", simplicial_entropy(cen),
                             von_neumann_entropy(rho), 1e-9, Relation::kAtMost));
  rep.checks.push_back(check("diag rho = working", 0,
                             inf_distance(real_diagonal(rho.matrix()), cen.working()), 1e-9));

  rep.tables.push_back(distribution_table("vertices", poly.vertices));
  rep.tables.push_back(distribution_table("centroid", {cen.working()}));
  rep.tables.push_back(distribution_table("maxent", {me.working()}));
  Table entropies{"entropies", {"chart_centroid", "simplicial_centroid", "S_rho_centroid",
                                "chart_maxent"}, {}};
  entropies.rows.push_back({chart_entropy(cen), simplicial_entropy(cen),
                            von_neumann_entropy(rho), chart_entropy(me)});
  rep.tables.push_back(std::move(entropies));
  rep.matrices.push_back({"rho_centroid", rho.matrix()});
  return rep;
}

// -- epr ---------------------------------------------------------------------

ScenarioReport epr(const ScenarioParams& params) {
  ScenarioReport rep;
  rep.scenario = "epr";
  rep.seed = params.seed;
  rep.prng = kPrng;
  rep.inputs.push_back({"theta1", fmt(params.theta1)});
  rep.inputs.push_back({"theta2", fmt(params.theta2)});
  rep.inputs.push_back({"samples", std::to_string(params.samples)});
  rep.inputs.push_back({"first", params.first == Party::kA ? "a" : "b"});

  const std::array<double, 3> t1s{0.0, kPi / 3, 2 * kPi / 3};
  const std::array<double, 4> t2s{0.0, kPi / 4, kPi / 2, 3 * kPi / 4};
  Table grid{"settings_grid", {"theta1", "theta2", "w1", "w2", "w3", "w4", "E"}, {}};
  double err = 0.0;
  double corr_err = 0.0;
  for (double a : t1s) {
    for (double b : t2s) {
      const auto w = epr_state(a, b).working();
      const double c = std::cos(a - b);
      err = std::max(err, inf_distance(w, {0.25 * (1 - c), 0.25 * (1 + c), 0.25 * (1 + c),
                                           0.25 * (1 - c)}));
      const double e = spin_correlator(w);
      corr_err = std::max(corr_err, std::abs(e + c));
      grid.rows.push_back({a, b, w[0], w[1], w[2], w[3], e});
    }
  }
  rep.tables.push_back(std::move(grid));
  rep.checks.push_back(check("analytic w on 12-point grid", 0, err, kExact));
  rep.checks.push_back(check("E = -cos(theta1 - theta2)", 0, corr_err, kExact));

  // Non-signaling: A's marginal across B's settings and vice versa.
  const BipartiteSplit split{1, 1};
  double ns = 0.0;
  for (double a : t1s) {
    std::vector<Distribution> fam;
    for (double b : t2s) fam.push_back(epr_state(a, b).working());
    ns = std::max(ns, non_signaling_check(fam, split, Side::kA, 1e-12).max_deviation);
  }
  for (double b : t2s) {
    std::vector<Distribution> fam;
    for (double a : t1s) fam.push_back(epr_state(a, b).working());
    ns = std::max(ns, non_signaling_check(fam, split, Side::kB, 1e-12).max_deviation);
  }
  rep.checks.push_back(check("non-signaling deviation", 0, ns, 1e-12));

  const auto sim = epr_protocol_sim(params.theta1, params.theta2, params.samples,
                                    params.seed, params.first);
  rep.tables.push_back(distribution_table("simulated", {sim.empirical, sim.analytic,
                                                        sim.standard_error}));
  rep.checks.push_back(check("protocol max z-score", 0, sim.max_z, 3.0,
                             Relation::kAtMost));
  const double loose = 5.0 / std::sqrt(static_cast<double>(params.samples));
  if (sim.inf_distance > loose) {
    rep.notes.push_back("inf-distance " + fmt(sim.inf_distance) + " exceeds 5/sqrt(n) = " +
                        fmt(loose));
  }

  const std::size_t n_eq = std::max<std::size_t>(params.samples / 10, 1);
  const auto same = epr_protocol_sim(params.theta1, params.theta1, n_eq, params.seed + 1,
                                     params.first);
  rep.checks.push_back(check("equal settings: P(X1 != X2)", 1,
                             same.empirical[1] + same.empirical[2],
                             1.0 / static_cast<double>(n_eq)));

  const ChshSettings s;
  const auto an = epr_chsh_analytic(s);
  rep.checks.push_back(check("|CHSH| analytic", 2 * std::sqrt(2.0), std::abs(an.value),
                             kExact));
  const auto mc = epr_chsh_sim(s, params.samples, params.seed + 2, params.first);
  rep.checks.push_back(check("|CHSH| protocol", 2 * std::sqrt(2.0), std::abs(mc.value),
                             3 * mc.standard_error));
  rep.tables.push_back(Table{"chsh",
                             {"value", "standard_error", "E_ab", "E_a'b", "E_ab'", "E_a'b'"},
                             {{an.value, 0.0, an.correlators[0], an.correlators[1],
                               an.correlators[2], an.correlators[3]},
                              {mc.value, mc.standard_error, mc.correlators[0],
                               mc.correlators[1], mc.correlators[2], mc.correlators[3]}}});
  rep.inputs.push_back({"chsh_settings", fmt(s.a0) + "," + fmt(s.a1) + ";" + fmt(s.b0) +
                                             "," + fmt(s.b1)});

  const auto w = epr_state(params.theta1, params.theta2).working();
  rep.checks.push_back(check("entanglement entropy = mutual information",
                             mutual_information(w, split),
                             entanglement_relative_entropy(w, split), 1e-9));
  return rep;
}

// -- prbox -------------------------------------------------------------------

std::vector<std::size_t> prbox_support(int a, int b) {
  static const std::array<std::array<std::size_t, 2>, 4> kSupport{
      {{0, 12}, {1, 13}, {2, 14}, {7, 11}}};
  const auto& s = kSupport.at(static_cast<std::size_t>(2 * a + b));
  return {s[0], s[1]};
}

ScenarioReport prbox(const ScenarioParams& params) {
  if (params.box_a < 0 || params.box_a > 1 || params.box_b < 0 || params.box_b > 1) {
    throw InvalidArgument("box settings must be 0 or 1");
  }
  ScenarioReport rep;
  rep.scenario = "prbox";
  rep.inputs.push_back({"A", std::to_string(params.box_a)});
  rep.inputs.push_back({"B", std::to_string(params.box_b)});

  const Register reg(4);
  const auto system = build_system(reg, prbox_constraints());
  const auto poly = enumerate_vertices(system);
  rep.checks.push_back(check("rank m", 13, system.m(), 0));
  rep.checks.push_back(check("dimension d", 16, static_cast<double>(system.d()), 0));
  rep.checks.push_back(check("vertex count", 4, static_cast<double>(poly.vertices.size()),
                             0));

  std::vector<Distribution> boxes;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      Distribution w(16, 0.0);
      for (auto s : prbox_support(a, b)) w[s] = 0.5;
      boxes.push_back(std::move(w));
    }
  }
  double vdist = poly.vertices.size() == 4 ? 0.0 : 1.0;
  for (std::size_t i = 0; i < std::min<std::size_t>(4, poly.vertices.size()); ++i) {
    vdist = std::max(vdist, inf_distance(poly.vertices[i], boxes[i]));
  }
  rep.checks.push_back(check("vertex table", 0, vdist, 1e-9));

  const auto g = make_state(system, poly, SelectCentroid{});
  rep.checks.push_back(check("<X3> on g_box", 0.5, variable_marginal(reg, g.working(), 3)[1],
                             1e-9));
  rep.checks.push_back(check("<X4> on g_box", 0.5, variable_marginal(reg, g.working(), 4)[1],
                             1e-9));
  double pr = 0.0;
  for (std::size_t s = 0; s < 16; ++s) {
    if ((reg.bit(s, 1) ^ reg.bit(s, 2)) == (reg.bit(s, 3) & reg.bit(s, 4))) pr += g.working()[s];
  }
  rep.checks.push_back(check("P(x1 xor x2 = x3 and x4)", 1, pr, 1e-9));

  // AB boxes from the (0,0) box by permutation.
  const auto rho00 = transcribe_pure(poly.vertices.front());
  const auto sobs = prbox_observable();
  double ab_err = 0.0;
  std::array<HermitianObservable, 4> chsh_obs{sobs, sobs, sobs, sobs};
  std::vector<Distribution> workings;
  for (int c = 0; c < 2; ++c) {
    for (int d = 0; d < 2; ++d) {
      const CMatrix u = prbox_unitary(c, d);
      const DensityOperator r(u * rho00.matrix() * u.adjoint());
      workings.push_back(real_diagonal(r.matrix()));
      ab_err = std::max(ab_err, inf_distance(workings.back(),
                                             poly.vertices.at(static_cast<std::size_t>(2 * c + d))));
      chsh_obs[static_cast<std::size_t>(c + 2 * d)] =
          HermitianObservable(u.adjoint() * sobs.matrix() * u);
    }
  }
  rep.checks.push_back(check("AB workings are the vertices", 0, ab_err, kExact));

  const CMatrix u_ab = prbox_unitary(params.box_a, params.box_b);
  const DensityOperator rho_ab(u_ab * rho00.matrix() * u_ab.adjoint());
  const double s_expect = (params.box_a == 1 && params.box_b == 1) ? -1.0 : 1.0;
  rep.checks.push_back(check("working = vertex row", 0,
                             inf_distance(real_diagonal(rho_ab.matrix()),
                                          poly.vertices.at(static_cast<std::size_t>(
                                              2 * params.box_a + params.box_b))),
                             kExact));
  rep.checks.push_back(
      check("<S>_AB", s_expect, born_expectation(rho_ab, sobs), 1e-9));

  const double chsh = chsh_value(rho00, chsh_obs);
  rep.checks.push_back(check("|CHSH| Hilbert space", 4, std::abs(chsh), 1e-9));
  rep.checks.push_back(check("deterministic |CHSH| max", 2, deterministic_chsh_max(), 1e-12, Relation::kAtMost));

  double ns = 0.0;
  for (int fixed = 0; fixed < 2; ++fixed) {
    // x1 depends on A only, x2 on B only.
    const auto a0 = variable_marginal(reg, workings[2 * fixed], 1);
    const auto a1 = variable_marginal(reg, workings[2 * fixed + 1], 1);
    const auto b0 = variable_marginal(reg, workings[fixed], 2);
    const auto b1 = variable_marginal(reg, workings[2 + fixed], 2);
    ns = std::max({ns, inf_distance(a0, a1), inf_distance(b0, b1)});
  }
  rep.checks.push_back(check("non-signaling deviation", 0, ns, 1e-12));

  rep.tables.push_back(distribution_table("vertices", poly.vertices));
  rep.tables.push_back(distribution_table("g_box", {g.working()}));
  rep.tables.push_back(Table{"chsh", {"value"}, {{chsh}}});
  rep.matrices.push_back({"rho_AB", rho_ab.matrix()});
  rep.matrices.push_back({"S", sobs.matrix()});
  return rep;
}

}  // namespace

bool Check::passed() const {
  if (!std::isfinite(observed)) return false;
  switch (relation) {
    case Relation::kEqual:
      return std::abs(observed - expected) <= tolerance;
    case Relation::kAtLeast:
      return observed >= expected - tolerance;
    case Relation::kAtMost:
      return observed <= expected + tolerance;
  }
  return false;
}

bool ScenarioReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> kNames{"one_bit", "qubit_mub", "singlet",
                                               "triplet", "epr",       "prbox"};
  return kNames;
}

ScenarioReport run_scenario(const std::string& name, const ScenarioParams& params) {
  if (name == "one_bit") return one_bit(params);
  if (name == "qubit_mub") return qubit_mub(params);
  if (name == "singlet") return singlet(params);
  if (name == "triplet") return triplet(params);
  if (name == "epr") {
    if (params.samples < 1) throw InvalidArgument("samples must be at least 1");
    return epr(params);
  }
  if (name == "prbox") return prbox(params);
  throw InvalidArgument("unknown scenario '" + name + "'");
}

ScenarioReport run_constraint_file(const std::filesystem::path& path,
                                   const SolveOptions& options) {
  return run_constraints(load_constraints(path), options, path.filename().string());
}

ScenarioReport run_constraints(const ConstraintFile& file, const SolveOptions& options,
                               const std::string& label) {
  ScenarioReport rep;
  rep.scenario = "solve";
  rep.inputs.push_back({"source", label});
  rep.inputs.push_back({"selection", selection_name(options.selection)});
  if (const auto* c = std::get_if<SelectCentroid>(&options.selection)) {
    rep.seed = c->options.seed;
    rep.prng = kPrng;
  }

  const Register reg(file.n_vars);
  const auto system = build_system(reg, file.constraints);
  if (!feasible(system)) throw InfeasibleError("constraints admit no distribution");
  const auto poly = enumerate_vertices(system);
  const auto state = make_state(system, poly, options.selection);

  rep.checks.push_back(check("constraint residual", 0, system.residual(state.working()),
                             kTol.lin));
  rep.checks.push_back(check("simplex reconstruction", 0,
                             inf_distance(state.simplex().point(), state.working()), 1e-9));

  const auto rho = transcribe_mixed(state);
  rep.checks.push_back(check("diag rho = working", 0,
                             inf_distance(real_diagonal(rho.matrix()), state.working()), 1e-9));
  const double s_rho = von_neumann_entropy(rho);
  const double s_mu = simplicial_entropy(state);
  rep.checks.push_back(check("S(rho) <= S_mu", s_mu, s_rho, 1e-9,
                             Relation::kAtMost));
  const auto canon = canonical_chart(rho);
  rep.checks.push_back(check("canonical chart entropy = S(rho)", s_rho,
                             shannon_bits(chart_distribution(rho, canon)), 1e-9));

  Table meta{"summary",
             {"n_vars", "d", "m", "vertices", "affine_dim", "simplex_rank", "chart_entropy",
              "simplicial_entropy", "von_neumann_entropy", "pure"},
             {}};
  meta.rows.push_back({static_cast<double>(file.n_vars), static_cast<double>(system.d()),
                       static_cast<double>(system.m()),
                       static_cast<double>(poly.vertices.size()),
                       static_cast<double>(poly.affine_dim),
                       static_cast<double>(state.simplex().rank()), chart_entropy(state),
                       s_mu, s_rho, is_pure(state) ? 1.0 : 0.0});
  rep.tables.push_back(std::move(meta));
  rep.tables.push_back(distribution_table("vertices", poly.vertices));
  rep.tables.push_back(distribution_table("working", {state.working()}));
  rep.tables.push_back(distribution_table("simplex_vertices", state.simplex().vertices));
  Table mu{"simplicial_coordinates", {}, {row_of(state.simplex().coords)}};
  for (std::size_t i = 0; i < state.simplex().coords.size(); ++i) {
    mu.columns.push_back("mu" + std::to_string(i + 1));
  }
  rep.tables.push_back(std::move(mu));
  Table spec{"spectrum", {}, {{}}};
  for (Eigen::Index i = 0; i < rho.spectrum().size(); ++i) {
    spec.columns.push_back("lambda" + std::to_string(i + 1));
    spec.rows.front().push_back(rho.spectrum()(i));
  }
  rep.tables.push_back(std::move(spec));

  if (options.mub_analysis && file.n_vars <= 3) {
    const auto cluster = mub_cluster(file.n_vars);
    const auto ce = cluster_entropy(rho, cluster);
    Table t{"mub_entropies", {"chart", "H"}, {}};
    for (std::size_t i = 0; i < ce.chart_entropies.size(); ++i) {
      t.rows.push_back({static_cast<double>(i), ce.chart_entropies[i]});
    }
    t.rows.push_back({-1.0, ce.sum});
    rep.tables.push_back(std::move(t));
    rep.tables.push_back(Table{"mub_cluster", {"sum", "bound", "delta_H"},
                               {{ce.sum, ce.bound, ce.delta}}});
    if (file.n_vars == 1) {
      rep.checks.push_back(check("cluster bound", ce.bound, ce.sum, 1e-9,
                                 Relation::kAtLeast));
    } else if (ce.delta < -1e-9) {
      rep.notes.push_back("MUB entropy sum is below (k-1)N + S(rho) by " + fmt(-ce.delta) +
                          " bits; the bound is not valid for N >= 2");
    }
    const auto b = entropic_bounds(rho, cluster[0], cluster[1]);
    rep.checks.push_back(check("Maassen-Uffink", b.maassen_uffink, b.h1 + b.h2, 1e-9, Relation::kAtLeast));
    rep.checks.push_back(check("Frank-Lieb", b.frank_lieb, b.h1 + b.h2, 1e-9,
                               Relation::kAtLeast));
  }
  rep.matrices.push_back({"rho", rho.matrix()});
  rep.matrices.push_back({"canonical_chart", canon.unitary});
  return rep;
}

// -- Building blocks ---------------------------------------------------------

std::vector<ConstraintSpec> singlet_constraints() {
  return {ConstraintSpec{RequirementProb{{1, 2}, 0.0}, 0},
          ConstraintSpec{RequirementProb{{-1, -2}, 0.0}, 0},
          ConstraintSpec{RequirementEquality{{1}, {2}}, 0}};
}

std::vector<ConstraintSpec> triplet_constraints() {
  return {ConstraintSpec{RequirementEquality{{1}, {-2}}, 0}};
}

std::vector<ConstraintSpec> prbox_constraints() {
  // Within each (x3, x4) cell the outputs satisfy x1 xor x2 = x3 and x4,
  // with the two admissible (x1, x2) pairs equally likely.
  const Register reg(4);
  std::vector<ConstraintSpec> out;
  for (std::size_t cell = 0; cell < 4; ++cell) {
    const int x3 = static_cast<int>(cell >> 1);
    const int x4 = static_cast<int>(cell & 1);
    std::vector<std::size_t> members;
    for (std::size_t s = 0; s < 16; ++s) {
      if ((s & 3) == cell) members.push_back(s);
    }
    for (std::size_t s : members) {
      const int x1 = reg.bit(s, 1);
      const int x2 = reg.bit(s, 2);
      const double c = (x1 ^ x2) == (x3 & x4) ? 0.5 : 0.0;
      Covector q{std::vector<double>(16, 0.0)};
      for (std::size_t t : members) q.entries[t] -= c;
      q.entries[s] += 1.0;
      out.push_back(ConstraintSpec{CovectorExpectation{std::move(q), 0.0}, 0});
    }
  }
  return out;
}

LinearSystem qubit_system(double theta) {
  const double s = std::sin(theta / 2);
  const double c = std::cos(theta / 2);
  return build_system(Register(1),
                      std::vector<LinearEquation>{LinearEquation{Covector{{s * s, -c * c}}, 0.0}});
}

QuantumStateReal epr_state(double theta1, double theta2) {
  const auto system = build_system(Register(2), triplet_constraints());
  const auto poly = enumerate_vertices(system);
  const double h = std::cos((theta1 - theta2) / 2);
  const double mu3 = 1.0 - h * h;
  return make_state(system, poly,
                    SelectVertexWeights{{mu3, 0.5 * h * h, 0.5 * h * h}});
}

Distribution epr_distribution(double theta1, double theta2) {
  const double c = std::cos(theta1 - theta2);
  return {0.25 * (1 - c), 0.25 * (1 + c), 0.25 * (1 + c), 0.25 * (1 - c)};
}

double spin_correlator(const Distribution& w) {
  if (w.size() != 4) throw InvalidArgument("correlator needs a two-bit distribution");
  return w[0] - w[1] - w[2] + w[3];
}

EprSimResult epr_protocol_sim(double theta1, double theta2, std::size_t samples,
                              std::uint64_t seed, Party first) {
  if (samples < 1) throw InvalidArgument("samples must be at least 1");
  std::mt19937_64 rng(seed);
  const double phi = first == Party::kA ? theta1 : theta2;
  std::array<std::size_t, 4> counts{};
  for (std::size_t n = 0; n < samples; ++n) {
    // Inverse CDF of (1/4)|cos u| on [0, 2pi), one quarter period at a time.
    const double t = 4.0 * uniform01(rng);
    const int k = std::min(static_cast<int>(t), 3);
    const double a = std::asin(t - k);
    double u = 0.0;
    switch (k) {
      case 0: u = a; break;
      case 1: u = kPi - a; break;
      case 2: u = kPi + a; break;
      default: u = 2 * kPi - a; break;
    }
    const double lambda = phi + u;
    const int x1 = std::cos(theta1 - lambda) > 0 ? 1 : 0;
    const int x2 = std::cos(theta2 - lambda) > 0 ? 0 : 1;
    ++counts[static_cast<std::size_t>(2 * x1 + x2)];
  }
  EprSimResult r;
  r.samples = samples;
  r.seed = seed;
  r.analytic = epr_distribution(theta1, theta2);
  const double n = static_cast<double>(samples);
  for (std::size_t i = 0; i < 4; ++i) {
    const double p = r.analytic[i];
    const double f = static_cast<double>(counts[i]) / n;
    const double se = std::sqrt(std::max(p * (1 - p), 0.0) / n);
    const double diff = std::abs(f - p);
    r.empirical.push_back(f);
    r.standard_error.push_back(se);
    r.inf_distance = std::max(r.inf_distance, diff);
    const double z = se > 0 ? diff / se : (diff <= 1e-15 ? 0.0 : HUGE_VAL);
    r.max_z = std::max(r.max_z, z);
  }
  return r;
}

ChshEstimate epr_chsh_analytic(const ChshSettings& s) {
  ChshEstimate e;
  e.correlators = {spin_correlator(epr_state(s.a0, s.b0).working()),
                   spin_correlator(epr_state(s.a1, s.b0).working()),
                   spin_correlator(epr_state(s.a0, s.b1).working()),
                   spin_correlator(epr_state(s.a1, s.b1).working())};
  e.value = e.correlators[0] + e.correlators[1] + e.correlators[2] - e.correlators[3];
  return e;
}

ChshEstimate epr_chsh_sim(const ChshSettings& s, std::size_t samples, std::uint64_t seed,
                          Party first) {
  const std::array<std::pair<double, double>, 4> pairs{
      {{s.a0, s.b0}, {s.a1, s.b0}, {s.a0, s.b1}, {s.a1, s.b1}}};
  ChshEstimate e;
  double var = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto r = epr_protocol_sim(pairs[i].first, pairs[i].second, samples, seed + i, first);
    const double corr = spin_correlator(r.empirical);
    e.correlators[i] = corr;
    var += std::max(1.0 - corr * corr, 0.0) / static_cast<double>(samples);
  }
  e.value = e.correlators[0] + e.correlators[1] + e.correlators[2] - e.correlators[3];
  e.standard_error = std::sqrt(var);
  return e;
}

double chsh_value(const DensityOperator& rho, const std::array<HermitianObservable, 4>& obs) {
  return born_expectation(rho, obs[0]) + born_expectation(rho, obs[1]) +
         born_expectation(rho, obs[2]) - born_expectation(rho, obs[3]);
}

double deterministic_chsh_max() {
  // Variables (a, a', b, b'); a deterministic local strategy is a basis state.
  const Register reg(4);
  auto spin_product = [&](int va, int vb) {
    std::vector<double> d(16);
    for (std::size_t s = 0; s < 16; ++s) {
      d[s] = (reg.bit(s, va) == reg.bit(s, vb)) ? 1.0 : -1.0;
    }
    return HermitianObservable(diagonal_matrix(d));
  };
  const std::array<HermitianObservable, 4> obs{spin_product(1, 3), spin_product(2, 3),
                                               spin_product(1, 4), spin_product(2, 4)};
  double best = 0.0;
  for (std::size_t s = 0; s < 16; ++s) {
    CVector e = CVector::Zero(16);
    e(static_cast<Eigen::Index>(s)) = 1.0;
    best = std::max(best, std::abs(chsh_value(DensityOperator::pure(e), obs)));
  }
  return best;
}

CMatrix prbox_unitary(int c, int d) {
  if (c < 0 || c > 1 || d < 0 || d > 1) throw InvalidArgument("box settings must be 0 or 1");
  // Big-endian: x1 = bit 3, x2 = bit 2, x3 = bit 1, x4 = bit 0.
  CMatrix u = CMatrix::Zero(16, 16);
  for (std::size_t s = 0; s < 16; ++s) {
    std::size_t t = s ^ (static_cast<std::size_t>(c) << 1) ^ static_cast<std::size_t>(d);
    if (c == 1 && d == 1) t ^= 4;
    u(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(s)) = 1.0;
  }
  return u;
}

HermitianObservable prbox_observable() {
  std::vector<double> d(16, -1.0);
  for (std::size_t s : {0, 12, 1, 13, 2, 14, 10, 15}) d[s] = 1.0;
  return HermitianObservable(diagonal_matrix(d));
}

}  // namespace bornlp
