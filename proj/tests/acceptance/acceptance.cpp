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

// Acceptance report: one PASS/FAIL line per criterion and tolerance.
//
// Items listed in kKnownFalse are properties that do not hold in general; they
// are evaluated and printed like every other line but do not change the exit
// status. Any other FAIL makes the process exit with status 1.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "bornlp/scenarios.hpp"
#include "oracles.hpp"
#include "properties.hpp"

namespace {

using namespace bornlp;
using namespace bornlp::testing;
using Clock = std::chrono::steady_clock;

const std::set<std::string> kKnownFalse{"6.jaynes-regular-charts", "6.mub-cluster-N2",
                                        "6.mub-cluster-N3"};

int g_unexpected = 0;
int g_lines = 0;

void line(const std::string& id, bool ok, const std::string& text) {
  ++g_lines;
  const bool known = kKnownFalse.count(id) > 0;
  if (!ok && !known) ++g_unexpected;
  std::printf("%s  %-28s %s%s\n", ok ? "PASS" : "FAIL", id.c_str(), text.c_str(),
              (!ok && known) ? "  [known: does not hold in general]" : "");
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void within(const std::string& id, const std::string& what, double err, double tol) {
  line(id, std::isfinite(err) && err <= tol, what + ": error " + num(err) + " <= " + num(tol));
}

double inf_dist(const Distribution& x, const Distribution& y) {
  if (x.size() != y.size()) return HUGE_VAL;
  double out = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) out = std::max(out, std::abs(x[i] - y[i]));
  return out;
}

Distribution real_diag(const CMatrix& m) {
  Distribution out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) out[static_cast<std::size_t>(i)] = m(i, i).real();
  return out;
}

void timed(const std::string& id, double limit, const std::function<void()>& body) {
  const auto t0 = Clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    line(id + ".error", false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  line(id + ".runtime", s < limit, num(s) + " s < " + num(limit) + " s");
}

std::string num6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string data(const char* name) { return std::string(BORNLP_DATA_DIR) + "/" + name; }

void singlet() {
  const auto file = load_constraints(data("singlet.blc"));
  const auto system = build_system(Register(file.n_vars), file.constraints);
  const auto state = make_state(system, SelectMaxEnt{});
  within("1.working", "working = (0, 1/2, 1/2, 0)",
         inf_dist(state.working(), {0.0, 0.5, 0.5, 0.0}), 1e-12);
  const auto rho = transcribe_mixed(state);
  line("1.rank", rho.rank() == 1, "rank rho = " + std::to_string(rho.rank()) + ", expected 1");
  within("1.chart-entropy", "chart entropy = 1 bit", std::abs(chart_entropy(state) - 1), 1e-12);
}

void triplet() {
  const auto file = load_constraints(data("triplet.blc"));
  const auto system = build_system(Register(file.n_vars), file.constraints);
  const auto poly = enumerate_vertices(system);
  const std::vector<Distribution> expect{
      {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {0.5, 0.0, 0.0, 0.5}};
  double err = poly.vertices.size() == expect.size() ? 0.0 : HUGE_VAL;
  for (const auto& e : expect) {
    double best = HUGE_VAL;
    for (const auto& v : poly.vertices) best = std::min(best, inf_dist(v, e));
    err = std::max(err, best);
  }
  within("2.vertices", "vertex set (any order)", err, 1e-9);
  const auto cen = make_state(system, poly, SelectCentroid{});
  within("2.centroid", "centroid = (1/6, 1/3, 1/3, 1/6)",
         inf_dist(cen.working(), {1.0 / 6, 1.0 / 3, 1.0 / 3, 1.0 / 6}), 1e-9);
  const auto me = make_state(system, poly, SelectMaxEnt{});
  const auto oracle = grid_maxent(system);
  within("2.maxent-oracle", "maxent vs grid oracle", inf_dist(me.working(), oracle), 1e-6);
  within("2.maxent", "maxent = (1/4, 1/4, 1/4, 1/4)",
         inf_dist(me.working(), {0.25, 0.25, 0.25, 0.25}), 1e-6);
}

void epr() {
  double err = 0.0;
  const std::vector<double> t1s{0.0, std::numbers::pi / 3, 2 * std::numbers::pi / 3};
  const std::vector<double> t2s{0.0, std::numbers::pi / 4, std::numbers::pi / 2,
                                3 * std::numbers::pi / 4};
  for (double a : t1s) {
    for (double b : t2s) {
      const double c = std::cos(a - b);
      err = std::max(err, inf_dist(epr_state(a, b).working(),
                                   {(1 - c) / 4, (1 + c) / 4, (1 + c) / 4, (1 - c) / 4}));
    }
  }
  within("3.analytic-grid", "w entries (1/4)(1 +- cos) on 12 settings", err, 1e-12);

  const auto sim = epr_protocol_sim(0.0, std::numbers::pi / 3, 1'000'000, 20260417);
  line("3.monte-carlo", sim.max_z <= 3.0,
       "1e6 samples, max |z| = " + num(sim.max_z) + " <= 3 (seed 20260417, mt19937_64)");
  const auto chsh = epr_chsh_sim(ChshSettings{}, 1'000'000, 20260418);
  const double z = std::abs(std::abs(chsh.value) - 2 * std::sqrt(2.0)) / chsh.standard_error;
  line("3.chsh-monte-carlo", z <= 3.0,
       "|CHSH| = " + num(std::abs(chsh.value)) + ", " + num(z) + " sigma from 2 sqrt 2");

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
  within("3.non-signaling", "marginal deviation across settings", ns, 1e-12);
}

void prbox() {
  const auto file = load_constraints(data("prbox.blc"));
  const Register reg(file.n_vars);
  const auto system = build_system(reg, file.constraints);
  line("4.rank", system.m() == 13 && system.d() == 16,
       "m = " + std::to_string(system.m()) + ", d = " + std::to_string(system.d()) +
           "; expected 13, 16");
  const auto poly = enumerate_vertices(system);
  const std::vector<std::vector<std::size_t>> table{{0, 12}, {1, 13}, {2, 14}, {7, 11}};
  double err = poly.vertices.size() == 4 ? 0.0 : HUGE_VAL;
  for (std::size_t i = 0; i < std::min<std::size_t>(4, poly.vertices.size()); ++i) {
    Distribution w(16, 0.0);
    for (auto s : table[i]) w[s] = 0.5;
    err = std::max(err, inf_dist(poly.vertices[i], w));
  }
  within("4.vertices", std::to_string(poly.vertices.size()) + " vertices vs table", err, 1e-9);
  const auto g = make_state(system, poly, SelectCentroid{});
  double x3 = 0.0;
  double x4 = 0.0;
  for (std::size_t s = 0; s < 16; ++s) {
    x3 += reg.bit(s, 3) * g.working()[s];
    x4 += reg.bit(s, 4) * g.working()[s];
  }
  within("4.x3-x4", "<X3> = <X4> = 0.5 on g_box", std::max(std::abs(x3 - 0.5), std::abs(x4 - 0.5)),
         1e-9);
  const auto rho00 = transcribe_pure(poly.vertices.front());
  const auto s = prbox_observable();
  std::array<HermitianObservable, 4> obs{s, s, s, s};
  const std::array<std::pair<int, int>, 4> cd{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
  for (std::size_t k = 0; k < 4; ++k) {
    const CMatrix u = prbox_unitary(cd[k].first, cd[k].second);
    obs[k] = HermitianObservable(u.adjoint() * s.matrix() * u);
  }
  within("4.chsh", "|CHSH| = 4 via Born rule", std::abs(std::abs(chsh_value(rho00, obs)) - 4),
         1e-9);
}

void qubit() {
  const auto cluster = mub_cluster(1);
  double err = 0.0;
  double h3 = 0.0;
  for (int k = 0; k <= 24; ++k) {
    const double t = k * std::numbers::pi / 24;
    const auto rho = transcribe_pure(make_state(qubit_system(t), SelectMaxEnt{}).working());
    const double c = std::cos(t);
    const double sn = std::sin(t);
    err = std::max({err, inf_dist(chart_distribution(rho, cluster[0]), {(1 + c) / 2, (1 - c) / 2}),
                    inf_dist(chart_distribution(rho, cluster[1]), {(1 + sn) / 2, (1 - sn) / 2}),
                    inf_dist(chart_distribution(rho, cluster[2]), {0.5, 0.5})});
    h3 = std::max(h3, std::abs(cluster_entropy(rho, cluster).chart_entropies[2] - 1));
  }
  within("5.chart-formulas", "w1, w2, w3 on a 25-point theta grid", err, 1e-12);
  within("5.h3", "H3 = 1 bit on the grid", h3, 1e-12);
  const auto zero = cluster_entropy(
      transcribe_pure(make_state(qubit_system(0.0), SelectMaxEnt{}).working()), cluster);
  within("5.theta0", "theta = 0: H1 = 0, H2 = H3 = 1, delta_H = 0",
         std::max({std::abs(zero.chart_entropies[0]), std::abs(zero.chart_entropies[1] - 1),
                   std::abs(zero.chart_entropies[2] - 1), std::abs(zero.delta)}),
         1e-12);
  const double t = std::numbers::pi / 4;
  const auto quarter = cluster_entropy(
      transcribe_pure(make_state(qubit_system(t), SelectMaxEnt{}).working()), cluster);
  auto h = [](double p) { return shannon_bits({p, 1 - p}); };
  const double formula = h((1 + std::cos(t)) / 2) + h((1 + std::sin(t)) / 2) + 1;
  within("5.theta-pi/4", "entropy sum " + num6(quarter.sum) + " vs binary-entropy formulas " +
                             num6(formula),
         std::abs(quarter.sum - formula), 1e-12);
}

void suite_line(const std::string& id, const SuiteResult& r) {
  std::string text = r.name + ": " + std::to_string(r.cases) + " cases, " +
                     std::to_string(r.failures) + " violations";
  if (r.skipped > 0) text += ", " + std::to_string(r.skipped) + " singular charts skipped";
  text += ", worst " + num(r.worst);
  if (!r.example.empty()) text += " (e.g. " + r.example + ")";
  line(id, r.passed(), text);
}

void properties() {
  const auto seed = kPropertySeed;
  suite_line("6.round-trip", round_trip_suite(seed));
  suite_line("6.jaynes-transcribed", jaynes_transcribed_suite(seed + 1));
  suite_line("6.jaynes-regular-charts", jaynes_regular_chart_suite(seed + 2));
  suite_line("6.uncertainty", uncertainty_suite(seed + 3));
  suite_line("6.mub-cluster-N1", mub_cluster_suite(seed + 4, 1));
  suite_line("6.mub-cluster-N2", mub_cluster_suite(seed + 4, 2));
  suite_line("6.mub-cluster-N3", mub_cluster_suite(seed + 4, 3));
  suite_line("6.mub-saturation", mub_saturation_suite(seed + 5));
  suite_line("6.entanglement", entanglement_suite(seed + 6));
  suite_line("6.marginal-diagonal", marginal_diagonal_suite(seed + 7));
  suite_line("6.povm-entropy", povm_entropy_suite(seed + 8));
}

void oracle() { suite_line("7.vertex-oracle", vertex_oracle_suite(kPropertySeed + 9)); }

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  std::printf("acceptance (seed %llu for property suites)\n",
              static_cast<unsigned long long>(kPropertySeed));
  timed("1.singlet", 0.1, singlet);
  timed("2.triplet", 0.5, triplet);
  timed("3.epr", 10.0, epr);
  timed("4.prbox", 1.0, prbox);
  timed("5.qubit-mub", 0.1, qubit);
  timed("6.properties", 60.0, properties);
  timed("7.oracle", 5.0, oracle);
  std::printf("%d lines, %d unexpected failures\n", g_lines, g_unexpected);
  return g_unexpected == 0 ? 0 : 1;
}
