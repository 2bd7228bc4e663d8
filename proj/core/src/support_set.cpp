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

#include "digp/support_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace digp {

SupportSet::SupportSet(std::initializer_list<Index> indices)
    : SupportSet(std::vector<Index>(indices)) {}

SupportSet::SupportSet(std::vector<Index> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("SupportSet: duplicate index");
  }
}

SupportSet SupportSet::from_one_based(const std::vector<Index>& indices) {
  std::vector<Index> zero_based;
  zero_based.reserve(indices.size());
  for (Index i : indices) {
    if (i == 0) throw std::invalid_argument("SupportSet: one-based index 0");
    zero_based.push_back(i - 1);
  }
  return SupportSet(std::move(zero_based));
}

std::vector<Index> SupportSet::to_one_based() const {
  std::vector<Index> out(indices_);
  for (Index& i : out) ++i;
  return out;
}

bool SupportSet::contains(Index i) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

bool SupportSet::insert(Index i) {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), i);
  if (it != indices_.end() && *it == i) return false;
  indices_.insert(it, i);
  return true;
}

bool SupportSet::includes(const SupportSet& other) const noexcept {
  return std::includes(indices_.begin(), indices_.end(), other.indices_.begin(),
                       other.indices_.end());
}

std::size_t SupportSet::intersection_size(const SupportSet& other) const noexcept {
  std::size_t n = 0;
  auto a = indices_.begin();
  auto b = other.indices_.begin();
  while (a != indices_.end() && b != other.indices_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++n;
      ++a;
      ++b;
    }
  }
  return n;
}

SupportSet SupportSet::united(const SupportSet& other) const {
  SupportSet out;
  out.indices_.reserve(indices_.size() + other.indices_.size());
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                 other.indices_.end(), std::back_inserter(out.indices_));
  return out;
}

void SupportSet::check_bound(Index n, const char* what) const {
  if (bound() > n) {
    throw std::invalid_argument(std::string(what) + ": support index " +
                                std::to_string(indices_.back() + 1) +
                                " outside [1, " + std::to_string(n) + "]");
  }
}

std::string to_string(const SupportSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Index i : s) {
    if (!first) os << ", ";
    os << i + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

unsigned long ScoreVector::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), 0UL);
}

}  // namespace digp
