// Copyright 2026 The optcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "optcs/core.hpp"

#include <algorithm>
#include <ostream>

namespace optcs {

Coalition::Coalition(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (!members_.empty() && members_.front() < 0) {
    throw InvariantError("coalition member indices must be non-negative");
  }
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InvariantError("duplicate member in coalition");
  }
}

Coalition Coalition::full(int n) {
  std::vector<int> m(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
  Coalition c;
  c.members_ = std::move(m);
  return c;
}

Coalition Coalition::from_mask(std::uint64_t mask) {
  Coalition c;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) c.members_.push_back(i);
  }
  return c;
}

bool Coalition::contains(int player) const {
  return std::binary_search(members_.begin(), members_.end(), player);
}

bool Coalition::subset_of(const Coalition& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool Coalition::disjoint_with(const Coalition& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

Coalition Coalition::unite(const Coalition& other) const {
  Coalition out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out.members_));
  return out;
}

Coalition Coalition::intersect(const Coalition& other) const {
  Coalition out;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out.members_));
  return out;
}

Coalition Coalition::difference(const Coalition& other) const {
  Coalition out;
  std::set_difference(members_.begin(), members_.end(),
                      other.members_.begin(), other.members_.end(),
                      std::back_inserter(out.members_));
  return out;
}

Coalition Coalition::with(int player) const {
  if (contains(player)) return *this;
  Coalition out = *this;
  out.members_.insert(
      std::lower_bound(out.members_.begin(), out.members_.end(), player),
      player);
  return out;
}

std::uint64_t Coalition::mask() const {
  if (max_member() >= 64) {
    throw TooLarge("bitmask encoding requires player indices below 64");
  }
  std::uint64_t m = 0;
  for (int p : members_) m |= std::uint64_t{1} << p;
  return m;
}

std::ostream& operator<<(std::ostream& os, const Coalition& c) {
  os << '{';
  for (std::size_t i = 0; i < c.members().size(); ++i) {
    if (i != 0) os << ',';
    os << c.members()[i];
  }
  return os << '}';
}

bool CoalitionStructure::is_partition_of(int n) const {
  if (n < 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int covered = 0;
  for (const Coalition& block : blocks) {
    if (block.empty()) return false;
    for (int p : block.members()) {
      if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) return false;
      seen[static_cast<std::size_t>(p)] = 1;
      ++covered;
    }
  }
  return covered == n;
}

CoalitionStructure CoalitionStructure::canonical() const {
  CoalitionStructure out = *this;
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Coalition& a, const Coalition& b) {
              return a.members().front() < b.members().front();
            });
  return out;
}

Value welfare(const CoalitionStructure& structure,
              const ValuationOracle& oracle) {
  if (!structure.is_partition_of(oracle.player_count())) {
    throw NotAPartition("structure is not a partition of the player set");
  }
  Value total = 0;
  for (const Coalition& block : structure.blocks) total += oracle.value(block);
  return total;
}

}  // namespace optcs
