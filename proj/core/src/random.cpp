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

#include "digp/random.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace digp {

CounterRng CounterRng::stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t key = mix(seed ^ 0x6a09e667f3bcc908ULL);
  for (std::uint64_t step : path) key = mix(key ^ mix(step + 0x3c6ef372fe94f82bULL));
  return CounterRng(key);
}

double standard_normal(CounterRng& rng) {
  // A fresh distribution per draw keeps the stream position independent of
  // any cached second deviate.
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

double uniform01(CounterRng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t uniform_below(CounterRng& rng, std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: empty range");
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  return dist(rng);
}

std::vector<std::size_t> sample_without_replacement(CounterRng& rng, std::size_t n,
                                                    std::size_t k) {
  if (k > n) throw std::invalid_argument("sample_without_replacement: k exceeds n");
  // Partial Fisher-Yates.
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + uniform_below(rng, n - i)]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace digp
