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

#include <Eigen/Dense>

#include "digp/support_set.hpp"

namespace digp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Singular values below this fraction of the largest are treated as zero
/// by every least-squares solve in the library.
inline constexpr double kRankTolerance = 1e-10;

/// Columns of `a` indexed by `support`, in ascending index order.
Matrix columns(const Matrix& a, const SupportSet& support);

/// Minimum-norm least-squares coefficients of `y` on the columns of `b`.
/// Rank-deficient `b` is handled through a complete orthogonal decomposition.
Vector least_squares(const Matrix& b, const Vector& y);

/// y - B B^+ y. Returns `y` when `b` has no columns.
Vector resid(const Vector& y, const Matrix& b);

struct SupportFit {
  Vector estimate;  // length N, zero off-support
  Vector residual;  // length M
};

/// Least-squares fit of `y` restricted to the columns in `support`.
/// Throws std::invalid_argument when |support| > M or indices exceed N.
SupportFit fit_on_support(const Matrix& a, const Vector& y, const SupportSet& support);

/// x with x_T = A_T^+ y and zeros elsewhere.
Vector least_squares_on_support(const Matrix& a, const Vector& y, const SupportSet& support);

/// The k indices with the largest |x_i|; ties go to the lower index.
SupportSet max_indices(const Vector& x, std::size_t k);

/// As max_indices, but only indices in `candidates` compete.
SupportSet max_indices_within(const Vector& x, const SupportSet& candidates, std::size_t k);

/// Index of the largest |x_i| with i not in `excluded`.
Index argmax_excluding(const Vector& x, const SupportSet& excluded);

/// s_j += 1 for every j in `support`.
ScoreVector supp_accumulate(ScoreVector s, const SupportSet& support);
void supp_accumulate_into(ScoreVector& s, const SupportSet& support);

}  // namespace digp
