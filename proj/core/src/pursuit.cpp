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

#include "digp/pursuit.hpp"

#include <stdexcept>
#include <string>

namespace digp {
namespace {

void check_common(const char* who, const Matrix& a, std::size_t k_max, const Vector& y,
                  const SupportSet& initial) {
  const auto m = static_cast<std::size_t>(a.rows());
  if (static_cast<std::size_t>(y.size()) != m) {
    throw std::invalid_argument(std::string(who) + ": A has " + std::to_string(m) +
                                " rows but y has length " + std::to_string(y.size()));
  }
  if (k_max > m) {
    throw std::invalid_argument(std::string(who) + ": K_max = " + std::to_string(k_max) +
                                " exceeds M = " + std::to_string(m));
  }
  if (initial.size() > k_max) {
    throw std::invalid_argument(std::string(who) + ": |T_ini| = " +
                                std::to_string(initial.size()) + " exceeds K_max = " +
                                std::to_string(k_max));
  }
  initial.check_bound(static_cast<Index>(a.cols()), who);
}

PursuitResult finish(const Matrix& a, const Vector& y, SupportSet support,
                     std::size_t iterations) {
  SupportFit fit = fit_on_support(a, y, support);
  return PursuitResult{std::move(support), std::move(fit.estimate), fit.residual.norm(),
                       iterations};
}

// SP candidate set: matched-filter top-k merged with `keep`, cut back to the M
// strongest matched-filter entries when the union no longer fits.
SupportSet sp_candidates(const Vector& correlation, std::size_t k_max, const SupportSet& keep,
                         std::size_t m) {
  SupportSet merged = max_indices(correlation, k_max).united(keep);
  if (merged.size() > m) merged = max_indices_within(correlation, merged, m);
  return merged;
}

}  // namespace

PursuitResult mod_omp(const Matrix& a, std::size_t k_max, const Vector& y,
                      const SupportSet& initial) {
  check_common("mod_omp", a, k_max, y, initial);
  SupportSet support = initial;
  Vector r = fit_on_support(a, y, support).residual;
  std::size_t iterations = 0;
  while (support.size() < k_max) {
    const Vector correlation = a.transpose() * r;
    support.insert(argmax_excluding(correlation, support));
    r = fit_on_support(a, y, support).residual;
    ++iterations;
  }
  return finish(a, y, std::move(support), iterations);
}

PursuitResult mod_sp(const Matrix& a, std::size_t k_max, const Vector& y,
                     const SupportSet& initial, std::vector<double>* residual_trace) {
  check_common("mod_sp", a, k_max, y, initial);
  const auto m = static_cast<std::size_t>(a.rows());

  SupportSet candidates = sp_candidates(a.transpose() * y, k_max, initial, m);
  SupportSet current =
      max_indices_within(fit_on_support(a, y, candidates).estimate, candidates, k_max);
  Vector r = fit_on_support(a, y, current).residual;
  double current_norm = r.norm();
  if (residual_trace) residual_trace->assign(1, current_norm);

  // Counts every executed pass, the rejected last one included.
  std::size_t passes = 0;
  while (passes < kMaxSubspaceIterations) {
    ++passes;
    candidates = sp_candidates(a.transpose() * r, k_max, current, m);
    SupportSet next =
        max_indices_within(fit_on_support(a, y, candidates).estimate, candidates, k_max);
    Vector next_r = fit_on_support(a, y, next).residual;
    const double next_norm = next_r.norm();
    if (residual_trace) residual_trace->push_back(next_norm);
    if (next_norm >= current_norm) break;
    current = std::move(next);
    current_norm = next_norm;
    r = std::move(next_r);
  }
  return finish(a, y, std::move(current), passes);
}

GreedyStep forward_add(const Matrix& a, const Vector& y, const Vector& residual,
                       const SupportSet& support) {
  if (support.size() >= static_cast<std::size_t>(a.rows())) {
    throw std::invalid_argument("forward_add: support already has M = " +
                                std::to_string(a.rows()) + " elements");
  }
  if (residual.size() != a.rows()) {
    throw std::invalid_argument("forward_add: residual length does not match A");
  }
  SupportSet grown = support;
  grown.insert(argmax_excluding(a.transpose() * residual, support));
  Vector r = fit_on_support(a, y, grown).residual;
  return GreedyStep{std::move(r), std::move(grown)};
}

GreedyStep reverse_fetch(const Matrix& a, const Vector& y, const SupportSet& support,
                         std::size_t k) {
  if (support.size() != k + 1) {
    throw std::invalid_argument("reverse_fetch: expected |T| = " + std::to_string(k + 1) +
                                ", got " + std::to_string(support.size()));
  }
  const Vector coefficients = fit_on_support(a, y, support).estimate;
  SupportSet pruned = max_indices_within(coefficients, support, k);
  Vector r = fit_on_support(a, y, pruned).residual;
  return GreedyStep{std::move(r), std::move(pruned)};
}

PursuitResult frogs(const Matrix& a, std::size_t k_max, const Vector& y,
                    const SupportSet& initial, std::vector<LadderWrite>* ladder_log) {
  check_common("frogs", a, k_max, y, initial);
  if (k_max >= static_cast<std::size_t>(a.rows())) {
    throw std::invalid_argument("frogs: K_max = " + std::to_string(k_max) +
                                " must be below M = " + std::to_string(a.rows()));
  }

  // Slot k holds the current support of cardinality k and its residual; slot
  // k_max + 1 receives the forward step taken from cardinality k_max.
  std::vector<SupportSet> supports(k_max + 2);
  std::vector<Vector> residuals(k_max + 2);
  std::vector<double> norms(k_max + 2, 0.0);
  auto store = [&](std::size_t k, GreedyStep step, LadderWrite::Phase phase) {
    norms[k] = step.residual.norm();
    residuals[k] = std::move(step.residual);
    supports[k] = std::move(step.support);
    if (ladder_log) ladder_log->push_back({k, norms[k], phase});
  };

  const PursuitResult start = mod_omp(a, k_max, y, initial);
  store(0, GreedyStep{y, SupportSet{}}, LadderWrite::Phase::kOrdering);
  for (std::size_t l = 1; l <= k_max; ++l) {
    SupportSet ordered = max_indices_within(start.estimate, start.support, l);
    Vector r = fit_on_support(a, y, ordered).residual;
    store(l, GreedyStep{std::move(r), std::move(ordered)}, LadderWrite::Phase::kOrdering);
  }

  std::size_t k = k_max;
  std::size_t forward_steps = 0;
  if (k_max > 0) {
    do {
      store(k + 1, forward_add(a, y, residuals[k], supports[k]), LadderWrite::Phase::kForward);
      ++forward_steps;
      do {
        GreedyStep candidate = reverse_fetch(a, y, supports[k + 1], k);
        if (candidate.residual.norm() < norms[k]) {
          store(k, std::move(candidate), LadderWrite::Phase::kReverse);
          --k;
        } else {
          break;
        }
      } while (k != 0);
      ++k;
    } while (k != k_max + 1);
  }

  return finish(a, y, std::move(supports[k_max]), forward_steps);
}

std::string_view name(LocalSolver s) {
  switch (s) {
    case LocalSolver::kOmp:
      return "omp";
    case LocalSolver::kSp:
      return "sp";
    case LocalSolver::kFrogs:
      return "frogs";
  }
  return "?";
}

PursuitResult solve(LocalSolver s, const Matrix& a, std::size_t k_max, const Vector& y,
                    const SupportSet& initial) {
  switch (s) {
    case LocalSolver::kOmp:
      return mod_omp(a, k_max, y, initial);
    case LocalSolver::kSp:
      return mod_sp(a, k_max, y, initial);
    case LocalSolver::kFrogs:
      return frogs(a, k_max, y, initial);
  }
  throw std::invalid_argument("solve: unknown local solver");
}

}  // namespace digp
