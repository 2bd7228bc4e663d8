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

#include <filesystem>
#include <iosfwd>

#include "digp/signal_model.hpp"

namespace digp {

/// Version written by save_ensemble().
inline constexpr std::uint32_t kEnsembleFormatVersion = 1;

/// Flat little-endian ensemble dump.
///
///   offset  type        field
///   0       char[8]     magic "DIGPENS\0"
///   8       u32         format version (1)
///   12      u32         N
///   16      u32         M
///   20      u32         L
///   24      u32         K^(c)
///   28      u64         seed
///   then, for each node l = 1..L:
///           u32         K^(p)_l
///           f64         noise variance
///           u32, u32[]  |T^(c)| followed by its one-based indices
///           u32, u32[]  |T^(p)_l| followed by its one-based indices
///           f64[M*N]    A_l, column-major
///           f64[N]      x_l
///           f64[M]      y_l
///
/// Reading rejects unknown versions, truncated input and out-of-range indices.
void write_ensemble(std::ostream& out, const Ensemble& ensemble);
Ensemble read_ensemble(std::istream& in);

void save_ensemble(const std::filesystem::path& path, const Ensemble& ensemble);
Ensemble load_ensemble(const std::filesystem::path& path);

}  // namespace digp
