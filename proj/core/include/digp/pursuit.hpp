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

#include <string_view>
#include <vector>

#include "digp/linalg.hpp"

namespace digp {

/// Output triple of every local greedy solver, plus the inner iteration
/// count used for the convergence profiles.
struct PursuitResult {
  SupportSet support;
  Vector estimate;             // length N, zero outside `support`
  double residual_norm = 0.0;  // ||y - A_support * estimate_support||
  std::size_t iterations = 0;
};

/// Upper bound on subspace-pursuit refinement passes. Guards against limit
/// cycles; the residual test normally stops the loop after a handful.
inline constexpr std::size_t kMaxSubspaceIterations = 100;

/// Orthogonal matching pursuit grown from `initial` until |support| == k_max.
/// Runs exactly k_max - |initial| iterations.
PursuitResult mod_omp(const Matrix& a, std::size_t k_max, const Vector& y,
                      const SupportSet& initial = {});

/// Subspace pursuit whose first candidate set is merged with `initial`.
/// `residual_trace`, when given, receives ||r_0||, ||r_1||, ... including the
/// final rejected iterate. `iterations` counts executed passes, so a run
/// that stops on the first pass reports 1.
PursuitResult mod_sp(const Matrix& a, std::size_t k_max, const Vector& y,
                     const SupportSet& initial = {},
                     std::vector<double>* residual_trace = nullptr);

struct GreedyStep {
  Vector residual;
  SupportSet support;
};

/// Adds the strongest matched-filter index outside `support` and refits.
GreedyStep forward_add(const Matrix& a, const Vector& y, const Vector& residual,
                       const SupportSet& support);

/// Keeps the k largest least-squares coefficients of a (k+1)-support.
GreedyStep reverse_fetch(const Matrix& a, const Vector& y, const SupportSet& support,
                         std::size_t k);

/// One write into the FROGS residual ladder.
struct LadderWrite {
  enum class Phase { kOrdering, kForward, kReverse };
  std::size_t cardinality;
  double residual_norm;
  Phase phase;
};

/// Forward-reverse orthogonal greedy search. Starts from mod_omp and then
/// alternates forward_add with reverse_fetch, keeping a reverse step only if
/// it strictly lowers the residual stored for that cardinality.
/// Requires k_max <= M - 1.
PursuitResult frogs(const Matrix& a, std::size_t k_max, const Vector& y,
                    const SupportSet& initial = {},
                    std::vector<LadderWrite>* ladder_log = nullptr);

enum class LocalSolver { kOmp, kSp, kFrogs };

std::string_view name(LocalSolver s);

/// Dispatches to mod_omp / mod_sp / frogs.
PursuitResult solve(LocalSolver s, const Matrix& a, std::size_t k_max, const Vector& y,
                    const SupportSet& initial = {});

}  // namespace digp
