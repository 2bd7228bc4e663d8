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
#include <initializer_list>
#include <limits>
#include <vector>

namespace digp {

/// Counter-based SplitMix64 generator.
///
/// The n-th output is mix(key + n * golden_gamma), so a stream is fully
/// described by its 64-bit key and position. Independent streams are keyed
/// by hashing a path of integers (seed, purpose, trial, node, ...) so that
/// generation order never affects the values a stream produces.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key, std::uint64_t counter = 0) noexcept
      : key_(key), counter_(counter) {}

  /// Stream keyed by `seed` followed by `path`.
  static CounterRng stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return mix(key_ + kGamma * ++counter_); }

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  std::uint64_t key_;
  std::uint64_t counter_;
};

/// Purpose tags mixed into stream keys.
enum class Stream : std::uint64_t {
  kMatrix = 1,
  kCommonSupport = 2,
  kSignal = 3,
  kNoise = 4,
  kTopology = 5,
};

double standard_normal(CounterRng& rng);
double uniform01(CounterRng& rng);
/// Uniform integer in [0, n).
std::size_t uniform_below(CounterRng& rng, std::size_t n);
/// k distinct values drawn uniformly from [0, n), returned ascending.
std::vector<std::size_t> sample_without_replacement(CounterRng& rng, std::size_t n,
                                                    std::size_t k);

}  // namespace digp
