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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "digp/linalg.hpp"
#include "digp/random.hpp"

namespace digp {

enum class SignalKind { kGaussian, kBinary };

std::string_view name(SignalKind kind);
SignalKind parse_signal_kind(std::string_view text);

/// Parameters of the mixed support-set model: every node's signal is a
/// common part (support shared by all nodes, values drawn per node) plus a
/// private part with its own support.
struct ModelParams {
  std::size_t n = 500;                  // ambient dimension
  std::size_t m = 75;                   // measurements per node
  std::size_t nodes = 10;               // L
  std::size_t k_common = 10;            // K^(c)
  std::vector<std::size_t> k_private;   // K^(p)_l, one per node
  SignalKind kind = SignalKind::kGaussian;
  std::optional<double> smnr_db;        // nullopt: clean measurements

  static ModelParams uniform(std::size_t n, std::size_t m, std::size_t nodes,
                             std::size_t k_common, std::size_t k_private, SignalKind kind,
                             std::optional<double> smnr_db);

  double alpha() const { return static_cast<double>(m) / static_cast<double>(n); }
  std::size_t k_max(std::size_t node) const { return k_common + k_private.at(node); }

  /// Throws std::invalid_argument when the model is inconsistent.
  void validate() const;
};

/// M = alpha * N, rejecting alphas that do not give an integral M.
std::size_t measurements_for(double alpha, std::size_t n);

struct NodeProblem {
  Matrix a;                   // M x N, unit-norm columns
  Vector x;                   // length N
  Vector y;                   // length M
  SupportSet common;          // T^(c)
  SupportSet private_support; // T^(p)_l
  double noise_variance = 0.0;

  SupportSet true_support() const { return common.united(private_support); }
};

struct Ensemble {
  std::vector<NodeProblem> nodes;
  std::size_t k_common = 0;
  std::vector<std::size_t> k_private;
  std::uint64_t seed = 0;

  std::size_t size() const { return nodes.size(); }
  std::size_t k_max(std::size_t node) const { return k_common + k_private.at(node); }
};

/// i.i.d. N(0, 1/M) entries, then every column scaled to unit norm.
Matrix generate_sensing_matrix(std::size_t m, std::size_t n, CounterRng& rng);

/// E{||x||^2} for one node. Overlap between the common and private supports
/// is accounted for: with binary values each overlapping index carries 2.
double expected_signal_energy(SignalKind kind, std::size_t n, std::size_t k_common,
                              std::size_t k_private);

/// sigma_w^2 = E{||x||^2} / (SMNR * M); zero for clean measurements.
double calibrate_noise(const ModelParams& params, std::size_t node = 0);

SupportSet draw_common_support(const ModelParams& params, CounterRng& rng);

/// Draws the private support, coefficient values and measurement noise for
/// one node that uses matrix `a`.
NodeProblem draw_node_problem(const ModelParams& params, std::size_t node, Matrix a,
                              const SupportSet& common, CounterRng& rng);

/// Whole ensemble from one seed. Streams are split per node so that each
/// node's matrix and signal depend only on (seed, node).
Ensemble generate_ensemble(const ModelParams& params, std::uint64_t seed);

}  // namespace digp
