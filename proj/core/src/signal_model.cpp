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

#include "digp/signal_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace digp {

std::string_view name(SignalKind kind) {
  return kind == SignalKind::kGaussian ? "gaussian" : "binary";
}

SignalKind parse_signal_kind(std::string_view text) {
  if (text == "gaussian") return SignalKind::kGaussian;
  if (text == "binary") return SignalKind::kBinary;
  throw std::invalid_argument("unknown signal kind '" + std::string(text) +
                              "' (expected gaussian or binary)");
}

ModelParams ModelParams::uniform(std::size_t n, std::size_t m, std::size_t nodes,
                                 std::size_t k_common, std::size_t k_private, SignalKind kind,
                                 std::optional<double> smnr_db) {
  ModelParams p;
  p.n = n;
  p.m = m;
  p.nodes = nodes;
  p.k_common = k_common;
  p.k_private.assign(nodes, k_private);
  p.kind = kind;
  p.smnr_db = smnr_db;
  return p;
}

void ModelParams::validate() const {
  if (n == 0 || m == 0) throw std::invalid_argument("model: N and M must be positive");
  if (m > n) {
    throw std::invalid_argument("model: M = " + std::to_string(m) + " exceeds N = " +
                                std::to_string(n));
  }
  if (nodes == 0) throw std::invalid_argument("model: need at least one node");
  if (k_private.size() != nodes) {
    throw std::invalid_argument("model: expected " + std::to_string(nodes) +
                                " private sparsity levels, got " +
                                std::to_string(k_private.size()));
  }
  const std::size_t kp = *std::max_element(k_private.begin(), k_private.end());
  if (k_common + kp > m) {
    throw std::invalid_argument("model: K^(c) + K^(p) = " + std::to_string(k_common + kp) +
                                " exceeds M = " + std::to_string(m));
  }
  if (smnr_db && !std::isfinite(*smnr_db)) {
    throw std::invalid_argument("model: SMNR must be finite or 'clean'");
  }
}

std::size_t measurements_for(double alpha, std::size_t n) {
  const double exact = alpha * static_cast<double>(n);
  const double rounded = std::round(exact);
  if (!(alpha > 0.0 && alpha <= 1.0) || std::abs(exact - rounded) > 1e-9 * std::max(1.0, exact)) {
    throw std::invalid_argument("alpha = " + std::to_string(alpha) + " does not give an integral M for N = " +
                                std::to_string(n));
  }
  return static_cast<std::size_t>(rounded);
}

Matrix generate_sensing_matrix(std::size_t m, std::size_t n, CounterRng& rng) {
  if (m == 0 || n == 0 || m > n) {
    throw std::invalid_argument("generate_sensing_matrix: need 1 <= M <= N, got M = " +
                                std::to_string(m) + ", N = " + std::to_string(n));
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  Matrix a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, j) = scale * standard_normal(rng);
    a.col(j) /= a.col(j).norm();
  }
  return a;
}

double expected_signal_energy(SignalKind kind, std::size_t n, std::size_t k_common,
                              std::size_t k_private) {
  const double kc = static_cast<double>(k_common);
  const double kp = static_cast<double>(k_private);
  if (kind == SignalKind::kGaussian) return kc + kp;
  // Each of the expected kc*kp/n overlapping indices holds 2, adding 4 - 2.
  return kc + kp + 2.0 * kc * kp / static_cast<double>(n);
}

double calibrate_noise(const ModelParams& params, std::size_t node) {
  if (!params.smnr_db) return 0.0;
  const double linear = std::pow(10.0, *params.smnr_db / 10.0);
  if (!(linear > 0.0) || !std::isfinite(linear)) {
    throw std::invalid_argument("calibrate_noise: SMNR must be positive in linear scale");
  }
  const double energy =
      expected_signal_energy(params.kind, params.n, params.k_common, params.k_private.at(node));
  return energy / (linear * static_cast<double>(params.m));
}

SupportSet draw_common_support(const ModelParams& params, CounterRng& rng) {
  return SupportSet(sample_without_replacement(rng, params.n, params.k_common));
}

NodeProblem draw_node_problem(const ModelParams& params, std::size_t node, Matrix a,
                              const SupportSet& common, CounterRng& rng) {
  if (static_cast<std::size_t>(a.rows()) != params.m ||
      static_cast<std::size_t>(a.cols()) != params.n) {
    throw std::invalid_argument("draw_node_problem: matrix shape does not match the model");
  }
  NodeProblem p;
  p.common = common;
  p.private_support =
      SupportSet(sample_without_replacement(rng, params.n, params.k_private.at(node)));

  auto draw_value = [&] {
    return params.kind == SignalKind::kGaussian ? standard_normal(rng) : 1.0;
  };
  p.x = Vector::Zero(static_cast<Eigen::Index>(params.n));
  for (Index i : p.common) p.x[static_cast<Eigen::Index>(i)] += draw_value();
  for (Index i : p.private_support) p.x[static_cast<Eigen::Index>(i)] += draw_value();

  p.noise_variance = calibrate_noise(params, node);
  p.y = a * p.x;
  if (p.noise_variance > 0.0) {
    const double sigma = std::sqrt(p.noise_variance);
    for (Eigen::Index i = 0; i < p.y.size(); ++i) p.y[i] += sigma * standard_normal(rng);
  }
  p.a = std::move(a);
  return p;
}

Ensemble generate_ensemble(const ModelParams& params, std::uint64_t seed) {
  params.validate();
  Ensemble e;
  e.seed = seed;
  e.k_common = params.k_common;
  e.k_private = params.k_private;
  CounterRng common_rng = CounterRng::stream(seed, {static_cast<std::uint64_t>(Stream::kCommonSupport)});
  const SupportSet common = draw_common_support(params, common_rng);
  e.nodes.reserve(params.nodes);
  for (std::size_t l = 0; l < params.nodes; ++l) {
    CounterRng matrix_rng = CounterRng::stream(seed, {static_cast<std::uint64_t>(Stream::kMatrix), l});
    CounterRng signal_rng = CounterRng::stream(seed, {static_cast<std::uint64_t>(Stream::kSignal), l});
    e.nodes.push_back(draw_node_problem(
        params, l, generate_sensing_matrix(params.m, params.n, matrix_rng), common, signal_rng));
  }
  return e;
}

}  // namespace digp
