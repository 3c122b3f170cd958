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

#include <random>

#include <benchmark/benchmark.h>

#include "bornlp/charts.hpp"
#include "bornlp/maxent.hpp"
#include "bornlp/measurement.hpp"
#include "bornlp/polytope.hpp"
#include "bornlp/scenarios.hpp"

namespace {

using namespace bornlp;

// Normalization plus `rows` random {-1, 0, 1} equations through an interior point.
LinearSystem random_system(int n_vars, int rows, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Register reg(n_vars);
  const std::size_t d = reg.dim();
  std::gamma_distribution<double> gamma(1.0, 1.0);
  Distribution p(d);
  double total = 0.0;
  for (auto& x : p) total += (x = gamma(rng));
  for (auto& x : p) x /= total;
  std::uniform_int_distribution<int> coef(-1, 1);
  std::vector<LinearEquation> eqs;
  for (int r = 0; r < rows; ++r) {
    LinearEquation e;
    e.a.entries.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
      e.a.entries[i] = coef(rng);
      e.b += e.a.entries[i] * p[i];
    }
    eqs.push_back(std::move(e));
  }
  return build_system(reg, eqs);
}

void BM_Vertices(benchmark::State& state) {
  const auto sys = random_system(static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(1)), 1);
  VertexOptions opts;
  opts.strategy = state.range(2) == 0 ? VertexStrategy::kExhaustive : VertexStrategy::kPivot;
  std::size_t count = 0;
  for (auto _ : state) {
    const auto poly = enumerate_vertices(sys, opts);
    count = poly.vertices.size();
    benchmark::DoNotOptimize(count);
  }
  state.counters["vertices"] = static_cast<double>(count);
}
BENCHMARK(BM_Vertices)
    ->Args({2, 1, 0})->Args({3, 2, 0})->Args({3, 2, 1})->Args({4, 3, 0})->Args({4, 3, 1})
    ->Unit(benchmark::kMicrosecond);

void BM_PrBoxPolytope(benchmark::State& state) {
  const auto sys = build_system(Register(4), prbox_constraints());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(sys));
}
BENCHMARK(BM_PrBoxPolytope)->Unit(benchmark::kMicrosecond);

void BM_MaxEnt(benchmark::State& state) {
  const auto sys = random_system(static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(1)), 2);
  const auto poly = enumerate_vertices(sys);
  for (auto _ : state) benchmark::DoNotOptimize(maxent(sys, poly));
}
BENCHMARK(BM_MaxEnt)->Args({2, 1})->Args({3, 2})->Args({4, 3})->Unit(benchmark::kMicrosecond);

void BM_MubCluster(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mub_cluster(n));
}
BENCHMARK(BM_MubCluster)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_ClusterEntropy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto charts = mub_cluster(n);
  const auto d = std::size_t{1} << n;
  Distribution p(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) p[i] = static_cast<double>(i + 1);
  double s = 0.0;
  for (double x : p) s += x;
  for (auto& x : p) x /= s;
  const auto rho = DensityOperator::diagonal(p);
  for (auto _ : state) benchmark::DoNotOptimize(cluster_entropy(rho, charts));
}
BENCHMARK(BM_ClusterEntropy)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_EprSimulation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(epr_protocol_sim(0.0, 1.0, n, 20260417));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_EprSimulation)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
