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

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace digp {

using Index = std::size_t;

/// Sorted set of zero-based signal indices.
///
/// Internally indices are 0-based; everything that crosses a file or
/// console boundary goes through from_one_based()/to_one_based().
class SupportSet {
 public:
  using const_iterator = std::vector<Index>::const_iterator;

  SupportSet() = default;
  /// Throws std::invalid_argument on duplicate indices.
  SupportSet(std::initializer_list<Index> indices);
  explicit SupportSet(std::vector<Index> indices);

  static SupportSet from_one_based(const std::vector<Index>& indices);
  std::vector<Index> to_one_based() const;

  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(Index i) const noexcept;
  /// Largest index + 1, or 0 when empty.
  Index bound() const noexcept { return indices_.empty() ? 0 : indices_.back() + 1; }

  /// Returns false if already present.
  bool insert(Index i);

  const std::vector<Index>& indices() const noexcept { return indices_; }
  const_iterator begin() const noexcept { return indices_.begin(); }
  const_iterator end() const noexcept { return indices_.end(); }
  Index operator[](std::size_t k) const { return indices_[k]; }

  bool includes(const SupportSet& other) const noexcept;
  std::size_t intersection_size(const SupportSet& other) const noexcept;
  SupportSet united(const SupportSet& other) const;

  /// Throws std::invalid_argument unless every index is < n.
  void check_bound(Index n, const char* what) const;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::vector<Index> indices_;
};

/// "{1, 4, 9}" in one-based notation.
std::string to_string(const SupportSet& s);

/// Per-index vote tally; entries are only ever incremented.
class ScoreVector {
 public:
  explicit ScoreVector(std::size_t n) : counts_(n, 0) {}
  ScoreVector(std::initializer_list<unsigned> counts) : counts_(counts) {}

  std::size_t size() const noexcept { return counts_.size(); }
  unsigned operator[](std::size_t i) const { return counts_[i]; }
  const std::vector<unsigned>& counts() const noexcept { return counts_; }
  unsigned long total() const noexcept;

  void increment(Index i) { ++counts_[i]; }

  friend bool operator==(const ScoreVector&, const ScoreVector&) = default;

 private:
  std::vector<unsigned> counts_;
};

}  // namespace digp
