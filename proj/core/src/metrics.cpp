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

#include "digp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace digp {

double support_distortion(const SupportSet& truth, const SupportSet& estimate) {
  if (truth.empty()) throw std::invalid_argument("support_distortion: empty true support");
  return 1.0 - static_cast<double>(truth.intersection_size(estimate)) /
                   static_cast<double>(truth.size());
}

void MetricsAccumulator::add(const Vector& x, const Vector& estimate, const SupportSet& truth,
                             const SupportSet& support) {
  if (x.size() != estimate.size()) {
    throw std::invalid_argument("MetricsAccumulator: signal and estimate lengths differ");
  }
  add_sample(x.squaredNorm(), (x - estimate).squaredNorm(), support_distortion(truth, support));
}

void MetricsAccumulator::add_sample(double signal_energy, double error_energy,
                                    double distortion) {
  if (signal_energy < 0.0 || error_energy < 0.0 || distortion < 0.0 || distortion > 1.0) {
    throw std::invalid_argument("MetricsAccumulator: sample out of range");
  }
  signal_energy_ += signal_energy;
  error_energy_ += error_energy;
  distortion_sum_ += distortion;
  ++count_;
}

void MetricsAccumulator::merge(const MetricsAccumulator& other) {
  signal_energy_ += other.signal_energy_;
  error_energy_ += other.error_energy_;
  distortion_sum_ += other.distortion_sum_;
  count_ += other.count_;
}

Srer srer(const MetricsAccumulator& acc) {
  if (acc.count() == 0) throw std::invalid_argument("srer: nothing accumulated");
  if (acc.error_energy() == 0.0) {
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf};
  }
  const double linear = acc.signal_energy() / acc.error_energy();
  return {linear, 10.0 * std::log10(linear)};
}

double asce(const MetricsAccumulator& acc) {
  if (acc.count() == 0) throw std::invalid_argument("asce: nothing accumulated");
  return acc.distortion_sum() / static_cast<double>(acc.count());
}

double asce(const std::vector<std::pair<SupportSet, SupportSet>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("asce: no support pairs");
  double sum = 0.0;
  for (const auto& [truth, estimate] : pairs) sum += support_distortion(truth, estimate);
  return sum / static_cast<double>(pairs.size());
}

double noise_correlation_norm(const Matrix& a, const Vector& w, std::size_t k) {
  if (a.rows() != w.size()) {
    throw std::invalid_argument("noise_correlation_norm: A and w dimensions differ");
  }
  const Vector corr = a.transpose() * w;
  double sum = 0.0;
  for (Index i : max_indices(corr, k)) {
    const double c = corr[static_cast<Eigen::Index>(i)];
    sum += c * c;
  }
  return std::sqrt(sum);
}

std::size_t modsp_iteration_bound(const Vector& x, const SupportSet& initial, const Matrix& a,
                                  const Vector& w, std::size_t k) {
  if (x.size() != a.cols()) {
    throw std::invalid_argument("modsp_iteration_bound: x length does not match A");
  }
  initial.check_bound(static_cast<Index>(x.size()), "modsp_iteration_bound");
  double outside = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!initial.contains(static_cast<Index>(i))) outside += x[i] * x[i];
  }
  const double noise = noise_correlation_norm(a, w, k);
  if (noise == 0.0) return kUnboundedIterations;
  if (outside == 0.0) return 0;
  const double bound = std::ceil(std::log2(std::sqrt(outside) / noise));
  return bound <= 0.0 ? 0 : static_cast<std::size_t>(bound);
}

}  // namespace digp
