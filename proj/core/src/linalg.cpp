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

#include "digp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace digp {
namespace {

// Amplitude order with lowest-index tie-break.
struct LargerAmplitude {
  const Vector& x;
  bool operator()(Index a, Index b) const {
    const double fa = std::abs(x[static_cast<Eigen::Index>(a)]);
    const double fb = std::abs(x[static_cast<Eigen::Index>(b)]);
    if (fa != fb) return fa > fb;
    return a < b;
  }
};

SupportSet top_k(const Vector& x, std::vector<Index> pool, std::size_t k) {
  std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k), pool.end(),
                    LargerAmplitude{x});
  pool.resize(k);
  return SupportSet(std::move(pool));
}

}  // namespace

Matrix columns(const Matrix& a, const SupportSet& support) {
  support.check_bound(static_cast<Index>(a.cols()), "columns");
  Matrix out(a.rows(), static_cast<Eigen::Index>(support.size()));
  Eigen::Index c = 0;
  for (Index i : support) out.col(c++) = a.col(static_cast<Eigen::Index>(i));
  return out;
}

Vector least_squares(const Matrix& b, const Vector& y) {
  if (b.rows() != y.size()) {
    throw std::invalid_argument("least_squares: matrix has " + std::to_string(b.rows()) +
                                " rows but vector has length " + std::to_string(y.size()));
  }
  if (b.cols() == 0) return Vector(0);
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod;
  cod.setThreshold(kRankTolerance);
  cod.compute(b);
  return cod.solve(y);
}

Vector resid(const Vector& y, const Matrix& b) {
  if (b.rows() != y.size()) {
    throw std::invalid_argument("resid: matrix has " + std::to_string(b.rows()) +
                                " rows but vector has length " + std::to_string(y.size()));
  }
  if (b.cols() == 0) return y;
  return y - b * least_squares(b, y);
}

SupportFit fit_on_support(const Matrix& a, const Vector& y, const SupportSet& support) {
  if (a.rows() != y.size()) {
    throw std::invalid_argument("fit_on_support: A has " + std::to_string(a.rows()) +
                                " rows but y has length " + std::to_string(y.size()));
  }
  if (support.size() > static_cast<std::size_t>(a.rows())) {
    throw std::invalid_argument("fit_on_support: support of size " +
                                std::to_string(support.size()) + " exceeds M = " +
                                std::to_string(a.rows()));
  }
  const Matrix sub = columns(a, support);
  const Vector coef = least_squares(sub, y);
  SupportFit fit{Vector::Zero(a.cols()), y};
  if (support.empty()) return fit;
  Eigen::Index c = 0;
  for (Index i : support) fit.estimate[static_cast<Eigen::Index>(i)] = coef[c++];
  fit.residual = y - sub * coef;
  return fit;
}

Vector least_squares_on_support(const Matrix& a, const Vector& y, const SupportSet& support) {
  return fit_on_support(a, y, support).estimate;
}

SupportSet max_indices(const Vector& x, std::size_t k) {
  const auto n = static_cast<std::size_t>(x.size());
  if (k > n) {
    throw std::invalid_argument("max_indices: k = " + std::to_string(k) +
                                " exceeds vector length " + std::to_string(n));
  }
  std::vector<Index> pool(n);
  std::iota(pool.begin(), pool.end(), Index{0});
  return top_k(x, std::move(pool), k);
}

SupportSet max_indices_within(const Vector& x, const SupportSet& candidates, std::size_t k) {
  if (k > candidates.size()) {
    throw std::invalid_argument("max_indices_within: k = " + std::to_string(k) +
                                " exceeds candidate count " + std::to_string(candidates.size()));
  }
  candidates.check_bound(static_cast<Index>(x.size()), "max_indices_within");
  return top_k(x, candidates.indices(), k);
}

Index argmax_excluding(const Vector& x, const SupportSet& excluded) {
  const auto n = static_cast<Index>(x.size());
  Index best = n;
  double best_amp = -1.0;
  for (Index i = 0; i < n; ++i) {
    if (excluded.contains(i)) continue;
    const double amp = std::abs(x[static_cast<Eigen::Index>(i)]);
    if (amp > best_amp) {
      best_amp = amp;
      best = i;
    }
  }
  if (best == n) throw std::invalid_argument("argmax_excluding: every index is excluded");
  return best;
}

void supp_accumulate_into(ScoreVector& s, const SupportSet& support) {
  support.check_bound(static_cast<Index>(s.size()), "supp_accumulate");
  for (Index j : support) s.increment(j);
}

ScoreVector supp_accumulate(ScoreVector s, const SupportSet& support) {
  supp_accumulate_into(s, support);
  return s;
}

}  // namespace digp
