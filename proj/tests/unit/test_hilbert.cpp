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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "bornlp/bipartite.hpp"
#include "bornlp/charts.hpp"
#include "bornlp/measurement.hpp"
#include "bornlp/scenarios.hpp"
#include "bornlp/transcription.hpp"
#include "oracles.hpp"

namespace bornlp {
namespace {

using testing::Rng;

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
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

TEST(DensityOperator, RejectsInvalid) {
  CMatrix not_square(2, 3);
  not_square.setZero();
  EXPECT_THROW(DensityOperator{not_square}, InvalidArgument);
  CMatrix traceless = CMatrix::Zero(2, 2);
  EXPECT_THROW(DensityOperator{traceless}, InvalidArgument);
  CMatrix neg(2, 2);
  neg << 1.5, 0.0, 0.0, -0.5;
  EXPECT_THROW(DensityOperator{neg}, InvalidArgument);
  CMatrix skew(2, 2);
  skew << 0.5, 0.3, 0.0, 0.5;
  EXPECT_THROW(DensityOperator{skew}, InvalidArgument);
  EXPECT_THROW(DensityOperator::pure(CVector::Zero(2)), InvalidArgument);
}

TEST(DensityOperator, SpectrumIsDescending) {
  Rng rng(11);
  const auto rho = testing::random_density(rng, 4, 3);
  const auto& s = rho.spectrum();
  for (Eigen::Index i = 1; i < s.size(); ++i) EXPECT_GE(s(i - 1), s(i));
  EXPECT_EQ(rho.rank(), 3);
  const CMatrix back = rho.eigenbasis() * s.cast<Complex>().asDiagonal() *
                       rho.eigenbasis().adjoint();
  EXPECT_LE((back - rho.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(DensityOperator, DegenerateBasisIsDeterministic) {
  const auto a = DensityOperator::diagonal({0.25, 0.25, 0.25, 0.25});
  const auto b = DensityOperator::diagonal({0.25, 0.25, 0.25, 0.25});
  EXPECT_EQ(a.eigenbasis(), b.eigenbasis());
  EXPECT_NEAR(von_neumann_entropy(a), 2.0, 1e-12);
}

TEST(Transcription, PureAmplitudesAndGauge) {
  const Distribution w{0.0, 0.5, 0.5, 0.0};
  const auto psi = pure_amplitudes(w);
  EXPECT_NEAR(psi(1).real(), std::sqrt(0.5), 1e-15);
  Gauge g;
  g.phases = {1.0, 1.0, -1.0, 1.0};
  const auto rho = transcribe_pure(w, g);
  EXPECT_NEAR(rho.matrix()(1, 2).real(), -0.5, 1e-15);
  EXPECT_NEAR(von_neumann_entropy(rho), 0.0, 1e-10);
  Gauge bad;
  bad.phases = {2.0, 1.0, 1.0, 1.0};
  EXPECT_THROW(transcribe_pure(w, bad), InvalidArgument);
  Gauge short_gauge;
  short_gauge.phases = {1.0};
  EXPECT_THROW(transcribe_pure(w, short_gauge), InvalidArgument);
}

TEST(Transcription, MixedDiagonalIsWorking) {
  const auto st = make_state(build_system(Register(2), triplet_constraints()),
                             SelectCentroid{});
  const auto rho = transcribe_mixed(st);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(rho.matrix()(i, i).real(), st.working()[i], 1e-14);
  }
  EXPECT_LE(von_neumann_entropy(rho), simplicial_entropy(st) + 1e-12);
  Gauge small;
  small.ancilla_dim = 1;
  EXPECT_THROW(transcribe_mixed(st, small), InvalidArgument);
}

TEST(Transcription, BornMatchesClassical) {
  Rng rng(5);
  const auto st = testing::random_state(rng, 3);
  const auto rho = transcribe_mixed(st);
  const Covector q{{0.3, -1.0, 2.0, 0.0, 0.5, 1.5, -0.7, 0.1}};
  EXPECT_NEAR(born_expectation(rho, diagonal_observable(q)), expectation(st, q), 1e-12);
}

TEST(Transcription, ChannelPreservesTrace) {
  const auto rho = DensityOperator::pure(CVector::Constant(2, 1.0 / std::sqrt(2.0)));
  const double p = 0.25;
  const std::vector<CMatrix> kraus{std::sqrt(1 - p) * CMatrix::Identity(2, 2),
                                   std::sqrt(p) * pauli_x()};
  const auto out = apply_channel(rho, kraus);
  EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-15);
  EXPECT_THROW(apply_channel(rho, {0.5 * CMatrix::Identity(2, 2)}), InvalidArgument);
}

TEST(Charts, MubClusterIsUnbiased) {
  for (int n = 1; n <= 3; ++n) {
    const auto cluster = mub_cluster(n);
    const auto d = static_cast<std::size_t>(1) << n;
    ASSERT_EQ(cluster.size(), d + 1);
    for (std::size_t i = 0; i < cluster.size(); ++i) {
      cluster[i].validate();
      for (std::size_t j = i + 1; j < cluster.size(); ++j) {
        const CMatrix m = cluster[i].unitary.adjoint() * cluster[j].unitary;
        const double target = 1.0 / std::sqrt(static_cast<double>(d));
        EXPECT_LE((m.cwiseAbs().array() - target).abs().maxCoeff(), 1e-12)
            << "n=" << n << " pair " << i << "," << j;
      }
    }
  }
  EXPECT_THROW(mub_cluster(4), InvalidArgument);
}

TEST(Charts, OverlapOfRotation) {
  const double t = 0.3;
  EXPECT_NEAR(chart_overlap(Chart::identity(2), rotation_chart(t)), std::cos(t), 1e-15);
}

TEST(Charts, CanonicalChartDiagonalizes) {
  Rng rng(8);
  const auto rho = testing::random_density(rng, 4, 4);
  const auto chart = canonical_chart(rho);
  const CMatrix m = in_chart(rho, chart);
  const CMatrix off = m - CMatrix(m.diagonal().asDiagonal());
  EXPECT_LE(off.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Charts, ReverseTranscription) {
  Rng rng(9);
  const auto rho = testing::random_density(rng, 4, 2);
  const auto rev = reverse_transcribe(rho, Chart::identity(4));
  ASSERT_TRUE(std::holds_alternative<QuantumStateReal>(rev));
  const auto& st = std::get<QuantumStateReal>(rev);
  const auto diag = chart_distribution(rho, Chart::identity(4));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(st.working()[i], diag[i], 1e-12);

  // A pure state in its own eigenbasis: every |e_i|^2 is the same unit vector.
  const auto pure = DensityOperator::pure(CVector::Constant(2, 1.0 / std::sqrt(2.0)));
  CMatrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  const auto rev2 = reverse_transcribe(pure, Chart{h / std::sqrt(2.0), "h"});
  EXPECT_TRUE(std::holds_alternative<QuantumStateReal>(rev2) ||
              std::holds_alternative<SingularChart>(rev2));
  EXPECT_THROW(reverse_transcribe(DensityOperator::diagonal({0.2, 0.3, 0.5}),
                                  Chart::identity(3)),
               InvalidArgument);
}

TEST(Measurement, VonNeumannPovm) {
  const auto povm = HilbertPovm::von_neumann(mub_cluster(1)[1]);
  povm.validate();
  const auto rho = DensityOperator::pure(CVector::Constant(2, 1.0 / std::sqrt(2.0)));
  const auto e = povm_entropy(rho, povm);
  EXPECT_NEAR(e.entropy, 0.0, 1e-12);
  EXPECT_NEAR(e.probabilities[0], 1.0, 1e-12);
  const auto z = povm_entropy(rho, HilbertPovm::von_neumann(Chart::identity(2)));
  EXPECT_NEAR(z.entropy, 1.0, 1e-12);
}

TEST(Measurement, IndependentEffect) {
  const auto povm = HilbertPovm::von_neumann(Chart::identity(2));
  const CMatrix e = independent_effect(povm);
  HilbertPovm ext{{e, CMatrix::Identity(2, 2) - e}};
  ext.validate();
  EXPECT_TRUE(povm_independent(povm, ext));
  EXPECT_FALSE(povm_independent(povm, povm));
}

TEST(Measurement, EntropicBoundsQubit) {
  const auto cluster = mub_cluster(1);
  Rng rng(4);
  for (int k = 0; k < 20; ++k) {
    const auto rho = testing::random_density(rng, 2, 1 + k % 2);
    const auto b = entropic_bounds(rho, cluster[0], cluster[1]);
    EXPECT_NEAR(b.maassen_uffink, 1.0, 1e-12);
    EXPECT_TRUE(b.satisfied);
    EXPECT_GE(b.h1 + b.h2, b.frank_lieb - 1e-9);
    const auto c = cluster_entropy(rho, cluster);
    EXPECT_GE(c.delta, -1e-9);
  }
}

TEST(Measurement, InducedDistribution) {
  const auto rho = DensityOperator::diagonal({0.1, 0.2, 0.3, 0.4});
  CMatrix e = CMatrix::Zero(4, 4);
  e(2, 2) = 1.0;
  e(3, 3) = 1.0;
  const HermitianObservable effect(e);
  EXPECT_NEAR(effect_probability(rho, effect), 0.7, 1e-15);
  const auto w = induced_distribution(rho, effect, Chart::identity(4));
  EXPECT_NEAR(w[2], 3.0 / 7.0, 1e-15);
  EXPECT_NEAR(w[0], 0.0, 1e-15);
}

TEST(Hilbert, PartialTraceOfProduct) {
  Rng rng(21);
  const auto a = testing::random_density(rng, 2, 2);
  const auto b = testing::random_density(rng, 4, 2);
  const CMatrix ab = kron(a.matrix(), b.matrix());
  EXPECT_LE((partial_trace(ab, 2, 4, Side::kA) - a.matrix()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LE((partial_trace(ab, 2, 4, Side::kB) - b.matrix()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Bipartite, SingletQuantities) {
  Gauge g;
  g.phases = {1.0, 1.0, -1.0, 1.0};
  const auto rho = transcribe_pure({0.0, 0.5, 0.5, 0.0}, g);
  const BipartiteSplit split{1, 1};
  const auto reduced = reduced_state(rho, split, Side::kA);
  EXPECT_NEAR(von_neumann_entropy(reduced), 1.0, 1e-12);
  const auto ce = conditional_entropy(rho, split);
  EXPECT_NEAR(ce.value, -1.0, 1e-10);
  EXPECT_TRUE(ce.negative);
  const auto ee = entanglement_entropy(rho, split);
  EXPECT_FALSE(ee.support_violation);
  EXPECT_NEAR(ee.value, 2.0, 1e-10);
  const auto disc = quantum_discord(rho, split, default_discord_family(split));
  EXPECT_NEAR(disc.value, 1.0, 1e-9);
}

TEST(Bipartite, RelativeEntropySupport) {
  const auto rho = DensityOperator::diagonal({0.5, 0.5});
  const auto sigma = DensityOperator::diagonal({1.0, 0.0});
  EXPECT_TRUE(quantum_relative_entropy(rho, sigma).support_violation);
  EXPECT_NEAR(quantum_relative_entropy(sigma, rho).value, 1.0, 1e-12);
  EXPECT_NEAR(quantum_relative_entropy(rho, rho).value, 0.0, 1e-12);
}

}  // namespace
}  // namespace bornlp
