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

#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "optcs/errors.hpp"

namespace optcs {

// Welfare arithmetic is exact: every shipped game class is integer-valued,
// so 64-bit integers realize the "exact rational" contract. Floats never
// enter solver logic (quota and threshold comparisons must be exact).
using Value = std::int64_t;

// An immutable set of player indices, stored as a sorted, duplicate-free
// member list. Players are dense 0-based integers.
class Coalition {
 public:
  Coalition() = default;
  explicit Coalition(std::vector<int> members);
  Coalition(std::initializer_list<int> members)
      : Coalition(std::vector<int>(members)) {}

  // Players 0..n-1.
  static Coalition full(int n);
  // Members read off the set bits of `mask` (player i <-> bit i).
  static Coalition from_mask(std::uint64_t mask);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  // Largest member, or -1 when empty.
  int max_member() const { return members_.empty() ? -1 : members_.back(); }

  bool contains(int player) const;
  bool subset_of(const Coalition& other) const;
  bool disjoint_with(const Coalition& other) const;

  Coalition unite(const Coalition& other) const;
  Coalition intersect(const Coalition& other) const;
  Coalition difference(const Coalition& other) const;
  Coalition with(int player) const;

  // Bitmask encoding; requires all members < 64.
  std::uint64_t mask() const;

  friend bool operator==(const Coalition&, const Coalition&) = default;
  friend auto operator<=>(const Coalition&, const Coalition&) = default;

 private:
  std::vector<int> members_;
};

std::ostream& operator<<(std::ostream& os, const Coalition& c);

// A list of coalitions intended to partition the player set. Validity is a
// property checked against a player count, not enforced by the container.
struct CoalitionStructure {
  std::vector<Coalition> blocks;

  // Pairwise disjoint, no empty block, union equal to {0..n-1}.
  bool is_partition_of(int n) const;
  int block_count() const { return static_cast<int>(blocks.size()); }
  // Blocks reordered by least member; members are sorted already.
  CoalitionStructure canonical() const;
};

// Query interface for a characteristic function. Implementations must be
// deterministic, return 0 for the empty coalition, and be safe for
// concurrent read-only queries.
class ValuationOracle {
 public:
  virtual ~ValuationOracle() = default;
  virtual int player_count() const = 0;
  virtual Value value(const Coalition& coalition) const = 0;
};

// Oracle backed by a callable; handy for tests and ad-hoc games.
class FunctionOracle final : public ValuationOracle {
 public:
  FunctionOracle(int player_count, std::function<Value(const Coalition&)> fn)
      : player_count_(player_count), fn_(std::move(fn)) {}
  int player_count() const override { return player_count_; }
  Value value(const Coalition& c) const override { return fn_(c); }

 private:
  int player_count_;
  std::function<Value(const Coalition&)> fn_;
};

// Pass-through wrapper that counts queries. The count is atomic so that
// concurrent queries stay well-defined.
class CountingOracle final : public ValuationOracle {
 public:
  explicit CountingOracle(const ValuationOracle& inner) : inner_(&inner) {}
  int player_count() const override { return inner_->player_count(); }
  Value value(const Coalition& c) const override {
    queries_.fetch_add(1, std::memory_order_relaxed);
    return inner_->value(c);
  }
  std::uint64_t queries() const {
    return queries_.load(std::memory_order_relaxed);
  }
  void reset() { queries_.store(0, std::memory_order_relaxed); }

 private:
  const ValuationOracle* inner_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

// Social welfare of a coalition structure: the sum of block values.
// Throws NotAPartition if `structure` does not partition the oracle's
// player set.
Value welfare(const CoalitionStructure& structure,
              const ValuationOracle& oracle);

}  // namespace optcs
