/*
 * Copyright 2026 The digp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "digp/ensemble_io.hpp"
#include "digp/random.hpp"
#include "digp/signal_model.hpp"

namespace digp {
namespace {

TEST(CounterRng, StreamsAreReproducibleAndDistinct) {
  CounterRng a = CounterRng::stream(7, {1, 2, 3});
  CounterRng b = CounterRng::stream(7, {1, 2, 3});
  CounterRng c = CounterRng::stream(7, {1, 2, 4});
  CounterRng d = CounterRng::stream(8, {1, 2, 3});
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
    EXPECT_NE(x, d());
  }
}

TEST(CounterRng, PositionAddressesTheSequence) {
  CounterRng a(42);
  for (int i = 0; i < 10; ++i) a();
  CounterRng b(42, 10);
  EXPECT_EQ(a(), b());
}

TEST(RandomHelpers, Ranges) {
  CounterRng rng(3);
  double mean = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = uniform01(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    mean += u;
    ASSERT_LT(uniform_below(rng, 7), 7u);
  }
  EXPECT_NEAR(mean / 20000.0, 0.5, 0.01);
}

TEST(RandomHelpers, SampleWithoutReplacement) {
  CounterRng rng(4);
  std::vector<int> hits(20, 0);
  for (int t = 0; t < 4000; ++t) {
    const auto s = sample_without_replacement(rng, 20, 5);
    ASSERT_EQ(s.size(), 5u);
    ASSERT_TRUE(std::is_sorted(s.begin(), s.end()));
    ASSERT_EQ(std::set<std::size_t>(s.begin(), s.end()).size(), 5u);
    for (auto i : s) ++hits[i];
  }
  for (int h : hits) EXPECT_NEAR(h, 1000, 150);  // uniform: 4000 * 5 / 20
  EXPECT_THROW(sample_without_replacement(rng, 3, 4), std::invalid_argument);
}

TEST(SensingMatrix, UnitColumnsAndReproducible) {
  CounterRng r1 = CounterRng::stream(1, {9});
  CounterRng r2 = CounterRng::stream(1, {9});
  const Matrix a = generate_sensing_matrix(30, 80, r1);
  EXPECT_EQ(a, generate_sensing_matrix(30, 80, r2));
  for (Eigen::Index j = 0; j < a.cols(); ++j) EXPECT_NEAR(a.col(j).norm(), 1.0, 1e-12);
  CounterRng r3(0);
  EXPECT_THROW(generate_sensing_matrix(81, 80, r3), std::invalid_argument);
}

TEST(SensingMatrix, EntryVarianceBeforeScalingIsOneOverM) {
  // Unit-norm columns of an M-row Gaussian matrix have mean squared entry
  // exactly 1/M, so check the pre-scaling draw directly.
  CounterRng rng(17);
  double sum = 0.0;
  const int count = 250 * 500;
  for (int i = 0; i < count; ++i) {
    const double v = standard_normal(rng) / std::sqrt(250.0);
    sum += v * v;
  }
  EXPECT_NEAR(sum / count, 1.0 / 250.0, 0.1 / 250.0);
}

TEST(MeasurementsFor, IntegralOnly) {
  EXPECT_EQ(measurements_for(0.15, 500), 75u);
  EXPECT_EQ(measurements_for(0.1, 500), 50u);
  try {
    measurements_for(0.123, 500);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("0.123"), std::string::npos);
  }
}

TEST(Energy, AnalyticValues) {
  EXPECT_DOUBLE_EQ(expected_signal_energy(SignalKind::kGaussian, 500, 10, 10), 20.0);
  EXPECT_DOUBLE_EQ(expected_signal_energy(SignalKind::kBinary, 500, 10, 10), 20.4);
  const auto p = ModelParams::uniform(500, 75, 10, 10, 10, SignalKind::kGaussian, 20.0);
  EXPECT_DOUBLE_EQ(calibrate_noise(p), 20.0 / (100.0 * 75.0));
  auto clean = p;
  clean.smnr_db.reset();
  EXPECT_EQ(calibrate_noise(clean), 0.0);
}

double monte_carlo_energy(SignalKind kind, int draws) {
  const auto p = ModelParams::uniform(500, 20, 1, 10, 10, kind, std::nullopt);
  double sum = 0.0;
  for (int t = 0; t < draws; ++t) {
    CounterRng rng = CounterRng::stream(99, {static_cast<std::uint64_t>(t)});
    const SupportSet common = draw_common_support(p, rng);
    sum += draw_node_problem(p, 0, Matrix::Zero(20, 500), common, rng).x.squaredNorm();
  }
  return sum / draws;
}

TEST(Energy, MonteCarloMatchesGaussian) {
  EXPECT_NEAR(monte_carlo_energy(SignalKind::kGaussian, 100000), 20.0, 0.02 * 20.0);
}

TEST(Energy, MonteCarloMatchesBinaryWithOverlap) {
  EXPECT_NEAR(monte_carlo_energy(SignalKind::kBinary, 100000), 20.4, 0.02 * 20.4);
}

TEST(Energy, EmpiricalSmnrMatchesRequest) {
  const auto p = ModelParams::uniform(200, 40, 1, 5, 5, SignalKind::kGaussian, 20.0);
  double xs = 0.0, ws = 0.0;
  for (std::uint64_t t = 0; t < 10000; ++t) {
    const NodeProblem n = generate_ensemble(p, t).nodes[0];
    xs += n.x.squaredNorm();
    ws += (n.y - n.a * n.x).squaredNorm();
  }
  EXPECT_NEAR(10.0 * std::log10(xs / ws), 20.0, 0.2);
}

TEST(Ensemble, SharedCommonSupportAndCardinalities) {
  const auto p = ModelParams::uniform(100, 30, 5, 4, 6, SignalKind::kGaussian, 20.0);
  const Ensemble e = generate_ensemble(p, 5);
  ASSERT_EQ(e.size(), 5u);
  for (const auto& n : e.nodes) {
    EXPECT_EQ(n.common, e.nodes[0].common);
    EXPECT_EQ(n.common.size(), 4u);
    EXPECT_EQ(n.private_support.size(), 6u);
    const SupportSet t = n.true_support();
    EXPECT_GE(t.size(), 6u);
    EXPECT_LE(t.size(), 10u);
    for (Eigen::Index i = 0; i < n.x.size(); ++i) {
      if (!t.contains(static_cast<Index>(i))) EXPECT_EQ(n.x(i), 0.0);
    }
  }
  EXPECT_NE(e.nodes[0].a, e.nodes[1].a);
  EXPECT_NE(e.nodes[0].private_support, e.nodes[1].private_support);
}

TEST(Ensemble, DegenerateModels) {
  const Ensemble joint =
      generate_ensemble(ModelParams::uniform(60, 20, 4, 5, 0, SignalKind::kGaussian, {}), 1);
  for (const auto& n : joint.nodes) EXPECT_EQ(n.true_support(), joint.nodes[0].common);
  const Ensemble independent =
      generate_ensemble(ModelParams::uniform(60, 20, 4, 0, 5, SignalKind::kGaussian, {}), 1);
  for (const auto& n : independent.nodes) EXPECT_TRUE(n.common.empty());
}

TEST(Ensemble, BinaryOverlapAddsUp) {
  // Small N makes overlaps frequent.
  const auto p = ModelParams::uniform(12, 10, 4, 3, 3, SignalKind::kBinary, std::nullopt);
  bool seen = false;
  for (std::uint64_t s = 0; s < 50; ++s) {
    for (const auto& n : generate_ensemble(p, s).nodes) {
      for (Index j : n.common) {
        const double expected = n.private_support.contains(j) ? 2.0 : 1.0;
        EXPECT_EQ(n.x(static_cast<Eigen::Index>(j)), expected);
        seen = seen || expected == 2.0;
      }
      EXPECT_EQ(n.y, n.a * n.x);  // clean
    }
  }
  EXPECT_TRUE(seen);
}

TEST(Ensemble, SeedDeterminism) {
  const auto p = ModelParams::uniform(80, 20, 3, 3, 3, SignalKind::kGaussian, 20.0);
  const Ensemble a = generate_ensemble(p, 11);
  const Ensemble b = generate_ensemble(p, 11);
  const Ensemble c = generate_ensemble(p, 12);
  for (std::size_t l = 0; l < 3; ++l) {
    EXPECT_EQ(a.nodes[l].a, b.nodes[l].a);
    EXPECT_EQ(a.nodes[l].y, b.nodes[l].y);
    EXPECT_NE(a.nodes[l].y, c.nodes[l].y);
  }
}

TEST(Ensemble, ValidationRejectsInconsistentModels) {
  EXPECT_THROW(generate_ensemble(ModelParams::uniform(50, 10, 2, 6, 6, SignalKind::kGaussian, {}), 1),
               std::invalid_argument);
  EXPECT_THROW(generate_ensemble(ModelParams::uniform(50, 60, 2, 2, 2, SignalKind::kGaussian, {}), 1),
               std::invalid_argument);
  EXPECT_THROW(parse_signal_kind("ternary"), std::invalid_argument);
}

TEST(EnsembleIo, RoundTripIsBitExact) {
  const auto p = ModelParams::uniform(40, 12, 3, 2, 3, SignalKind::kGaussian, 20.0);
  const Ensemble e = generate_ensemble(p, 77);
  std::stringstream buf;
  write_ensemble(buf, e);
  const Ensemble back = read_ensemble(buf);
  ASSERT_EQ(back.size(), e.size());
  EXPECT_EQ(back.seed, 77u);
  EXPECT_EQ(back.k_common, 2u);
  for (std::size_t l = 0; l < e.size(); ++l) {
    EXPECT_EQ(back.nodes[l].a, e.nodes[l].a);
    EXPECT_EQ(back.nodes[l].x, e.nodes[l].x);
    EXPECT_EQ(back.nodes[l].y, e.nodes[l].y);
    EXPECT_EQ(back.nodes[l].common, e.nodes[l].common);
    EXPECT_EQ(back.nodes[l].private_support, e.nodes[l].private_support);
    EXPECT_EQ(back.nodes[l].noise_variance, e.nodes[l].noise_variance);
  }
}

TEST(EnsembleIo, RejectsCorruptInput) {
  const Ensemble e =
      generate_ensemble(ModelParams::uniform(20, 8, 2, 1, 1, SignalKind::kGaussian, {}), 1);
  std::stringstream buf;
  write_ensemble(buf, e);
  const std::string bytes = buf.str();

  std::stringstream truncated(bytes.substr(0, bytes.size() - 9));
  EXPECT_THROW(read_ensemble(truncated), std::runtime_error);

  std::string bad_magic = bytes;
  bad_magic[0] = 'X';
  std::stringstream s1(bad_magic);
  EXPECT_THROW(read_ensemble(s1), std::runtime_error);

  std::string bad_version = bytes;
  bad_version[8] = 9;
  std::stringstream s2(bad_version);
  EXPECT_THROW(read_ensemble(s2), std::runtime_error);
}

}  // namespace
}  // namespace digp
