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

// bornlp: worked examples and constraint-file solver.
//
// Exit status: 0 when every check passes, 1 when a check fails or the
// constraints are infeasible, 2 on usage or parse errors.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bornlp/scenarios.hpp"
#include "report_io.hpp"

namespace {

using namespace bornlp;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct OutputFlags {
  std::string json;
  std::string csv;
  bool bits = true;  // reserved; entropies are always reported in bits
  bool quiet = false;
};

void add_output_flags(CLI::App* app, OutputFlags& out) {
  app->add_option("--json", out.json, "Write the JSON report to a path ('-' for stdout)");
  app->add_option("--csv", out.csv, "Write the CSV report to a path ('-' for stdout)");
  app->add_flag("--bits", out.bits, "Entropy unit (bits; the only supported unit)");
  app->add_flag("-q,--quiet", out.quiet, "Suppress the check summary");
}

int emit(const ScenarioReport& report, const OutputFlags& out) {
  const bool stdout_taken = out.json == "-" || out.csv == "-";
  if (!out.quiet && !stdout_taken) std::cout << cli::report_text(report);
  if (!out.json.empty()) cli::write_output(out.json, cli::report_json(report));
  if (!out.csv.empty()) cli::write_output(out.csv, cli::report_csv(report));
  return report.all_passed() ? 0 : kExitFail;
}

Party parse_party(const std::string& s) { return s == "b" ? Party::kB : Party::kA; }

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_number(tok));
  return out;
}

ScenarioReport epr_sim_report(double t1, double t2, std::size_t samples, std::uint64_t seed,
                              Party first) {
  ScenarioReport rep;
  rep.scenario = "epr-sim";
  rep.seed = seed;
  rep.prng = "mt19937_64";
  std::ostringstream a, b;
  a.precision(12);
  b.precision(12);
  a << t1;
  b << t2;
  rep.inputs = {{"theta1", a.str()},
                {"theta2", b.str()},
                {"samples", std::to_string(samples)},
                {"first", first == Party::kA ? "a" : "b"}};
  const auto sim = epr_protocol_sim(t1, t2, samples, seed, first);
  rep.tables.push_back(Table{"distribution",
                             {"w1", "w2", "w3", "w4"},
                             {sim.empirical, sim.analytic, sim.standard_error}});
  rep.checks.push_back(Check{"max z-score", 0, sim.max_z, 3.0, Relation::kAtMost});
  rep.tables.push_back(Table{"distance",
                             {"inf_distance", "bound_5_over_sqrt_n"},
                             {{sim.inf_distance, 5.0 / std::sqrt(static_cast<double>(samples))}}});
  const double corr = spin_correlator(sim.empirical);
  rep.tables.push_back(Table{"correlator",
                             {"empirical", "analytic"},
                             {{corr, spin_correlator(sim.analytic)}}});
  return rep;
}

ScenarioReport chsh_report(const std::string& source, std::size_t samples,
                           std::uint64_t seed, Party first) {
  ScenarioReport rep;
  rep.scenario = "chsh";
  rep.inputs = {{"source", source}};
  if (source == "prbox") {
    ScenarioParams p;
    const auto full = run_scenario("prbox", p);
    for (const auto& c : full.checks) {
      if (c.name.find("CHSH") != std::string::npos) rep.checks.push_back(c);
    }
  } else if (source == "deterministic") {
    rep.checks.push_back(
        Check{"deterministic |CHSH| max", 2, deterministic_chsh_max(), 1e-12,
              Relation::kAtMost});
  } else if (source == "epr") {
    rep.seed = seed;
    rep.prng = "mt19937_64";
    rep.inputs.push_back({"samples", std::to_string(samples)});
    const ChshSettings s;
    const auto an = epr_chsh_analytic(s);
    const auto mc = epr_chsh_sim(s, samples, seed, first);
    rep.checks.push_back(Check{"|CHSH| analytic", 2 * std::sqrt(2.0), std::abs(an.value),
                               1e-12});
    rep.checks.push_back(Check{"|CHSH| protocol", 2 * std::sqrt(2.0), std::abs(mc.value),
                               3 * mc.standard_error});
    rep.tables.push_back(Table{"chsh",
                               {"value", "standard_error"},
                               {{an.value, 0.0}, {mc.value, mc.standard_error}}});
  } else {
    throw InvalidArgument("unknown CHSH source '" + source + "'");
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean constraint polytopes, maximum entropy and density operators"};
  app.require_subcommand(1);
  OutputFlags out;

  // scenario
  auto* sc = app.add_subcommand("scenario", "Run a named worked example");
  std::string name;
  ScenarioParams params;
  double theta = std::nan("");
  std::string first = "a";
  std::string mu_text;
  sc->add_option("name", name, "Scenario name")
      ->required()
      ->check(CLI::IsMember(scenario_names()));
  sc->add_option("--theta", theta, "Qubit angle (qubit_mub)");
  sc->add_option("--theta1", params.theta1, "Setting of A (epr)");
  sc->add_option("--theta2", params.theta2, "Setting of B (epr)");
  sc->add_option("--samples", params.samples, "Monte-Carlo samples (epr)")
      ->check(CLI::PositiveNumber);
  sc->add_option("--seed", params.seed, "PRNG seed");
  sc->add_option("--first", first, "Party whose setting arrives first (epr)")
      ->check(CLI::IsMember({"a", "b"}));
  sc->add_option("--box-a", params.box_a, "Box setting A (prbox)")->check(CLI::Range(0, 1));
  sc->add_option("--box-b", params.box_b, "Box setting B (prbox)")->check(CLI::Range(0, 1));
  sc->add_option("--phi", params.phi, "Gauge phase (singlet)");
  sc->add_option("--mu", mu_text, "Vertex weights, comma separated (one_bit)");
  add_output_flags(sc, out);

  // solve
  auto* so = app.add_subcommand("solve", "Run the full pipeline on a constraint file");
  std::string path;
  std::string selection = "maxent";
  std::string weights;
  std::uint64_t seed = 20260417;
  std::size_t centroid_samples = CentroidOptions{}.samples;
  bool no_mub = false;
  so->add_option("file", path, "Constraint file")->required()->check(CLI::ExistingFile);
  so->add_option("--selection", selection, "State selection rule")
      ->check(CLI::IsMember({"maxent", "centroid", "explicit"}));
  so->add_option("--weights", weights, "Working distribution for --selection explicit");
  so->add_option("--seed", seed, "PRNG seed (centroid sampling)");
  so->add_option("--centroid-samples", centroid_samples, "Accepted draws for sampled centroids")
      ->check(CLI::PositiveNumber);
  so->add_flag("--no-mub", no_mub, "Skip the MUB cluster analysis");
  add_output_flags(so, out);

  // epr-sim
  auto* es = app.add_subcommand("epr-sim", "Simulate the classical-communication protocol");
  double t1 = 0.0;
  double t2 = std::numbers::pi / 3;
  std::size_t samples = 1'000'000;
  std::uint64_t es_seed = 20260417;
  es->add_option("--theta1", t1, "Setting of A");
  es->add_option("--theta2", t2, "Setting of B");
  es->add_option("--samples", samples, "Number of runs")->check(CLI::PositiveNumber);
  es->add_option("--seed", es_seed, "PRNG seed");
  es->add_option("--first", first, "Party whose setting arrives first")
      ->check(CLI::IsMember({"a", "b"}));
  add_output_flags(es, out);

  // chsh
  auto* ch = app.add_subcommand("chsh", "Evaluate the CHSH combination");
  std::string source = "prbox";
  ch->add_option("--source", source, "prbox, epr or deterministic")
      ->check(CLI::IsMember({"prbox", "epr", "deterministic"}));
  ch->add_option("--samples", samples, "Runs per setting pair (epr)")
      ->check(CLI::PositiveNumber);
  ch->add_option("--seed", es_seed, "PRNG seed (epr)");
  ch->add_option("--first", first, "Party whose setting arrives first (epr)")
      ->check(CLI::IsMember({"a", "b"}));
  add_output_flags(ch, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sc) {
      if (!std::isnan(theta)) params.theta = theta;
      if (!mu_text.empty()) params.mu = parse_list(mu_text);
      params.first = parse_party(first);
      return emit(run_scenario(name, params), out);
    }
    if (*so) {
      SolveOptions opt;
      opt.mub_analysis = !no_mub;
      if (selection == "centroid") {
        CentroidOptions c;
        c.seed = seed;
        c.samples = centroid_samples;
        opt.selection = SelectCentroid{c};
      } else if (selection == "explicit") {
        if (weights.empty()) throw InvalidArgument("--selection explicit needs --weights");
        opt.selection = SelectExplicit{parse_list(weights)};
      }
      return emit(run_constraint_file(path, opt), out);
    }
    if (*es) return emit(epr_sim_report(t1, t2, samples, es_seed, parse_party(first)), out);
    if (*ch) return emit(chsh_report(source, samples, es_seed, parse_party(first)), out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
