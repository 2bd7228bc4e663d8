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

#include <limits>
#include <utility>
#include <vector>

#include "digp/linalg.hpp"

namespace digp {

/// d(T, T_hat) = 1 - |T n T_hat| / |T|. Throws on an empty true support.
double support_distortion(const SupportSet& truth, const SupportSet& estimate);

/// Pooled reconstruction statistics over (node, realization) pairs.
class MetricsAccumulator {
 public:
  void add(const Vector& x, const Vector& estimate, const SupportSet& truth,
           const SupportSet& support);
  /// Adds precomputed ||x||^2, ||x - x_hat||^2 and support distortion.
  void add_sample(double signal_energy, double error_energy, double distortion);
  void merge(const MetricsAccumulator& other);

  double signal_energy() const noexcept { return signal_energy_; }
  double error_energy() const noexcept { return error_energy_; }
  double distortion_sum() const noexcept { return distortion_sum_; }
  std::size_t count() const noexcept { return count_; }

 private:
  double signal_energy_ = 0.0;
  double error_energy_ = 0.0;
  double distortion_sum_ = 0.0;
  std::size_t count_ = 0;
};

struct Srer {
  double linear;
  double db;  // +inf for exact recovery
};

/// sum ||x||^2 / sum ||x - x_hat||^2 (ratio of sums, not mean of ratios).
Srer srer(const MetricsAccumulator& acc);

/// Mean support distortion of the accumulated pairs.
double asce(const MetricsAccumulator& acc);
double asce(const std::vector<std::pair<SupportSet, SupportSet>>& pairs);

inline constexpr std::size_t kUnboundedIterations = std::numeric_limits<std::size_t>::max();

/// max over K-subsets T of ||A_T^T w||, i.e. the norm of the K largest
/// entries of A^T w.
double noise_correlation_norm(const Matrix& a, const Vector& w, std::size_t k);

/// Iteration bound ceil(log2(||x outside T_ini|| / max_T ||A_T^T w||)) for
/// subspace pursuit seeded with `initial`. It only holds under a restricted
/// isometry condition (delta_3K <= 0.139) that is never checked, so treat the
/// value as a diagnostic. Negative logs clamp to 0; w = 0 gives
/// kUnboundedIterations.
std::size_t modsp_iteration_bound(const Vector& x, const SupportSet& initial, const Matrix& a,
                                  const Vector& w, std::size_t k);

}  // namespace digp
