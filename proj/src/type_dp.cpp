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

#include "optcs/type_dp.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace optcs {
namespace {

// Hard sanity cap on table allocation; honest failure beats an OOM kill.
constexpr std::size_t kMaxGridCells = std::size_t{1} << 32;

}  // namespace

int TypePartition::player_count() const {
  int n = 0;
  for (const Coalition& c : classes) n += c.size();
  return n;
}

std::vector<int> TypePartition::sizes() const {
  std::vector<int> s;
  s.reserve(classes.size());
  for (const Coalition& c : classes) s.push_back(c.size());
  return s;
}

void TypePartition::validate_partition_of(int n) const {
  CoalitionStructure as_structure{classes};
  if (classes.empty() || !as_structure.is_partition_of(n)) {
    throw NotAPartition("type classes do not partition the player set");
  }
}

TypeGrid::TypeGrid(std::vector<int> class_sizes) {
  if (class_sizes.empty()) {
    throw InvariantError("type grid needs at least one class");
  }
  extents_.reserve(class_sizes.size());
  for (int s : class_sizes) {
    if (s < 0) throw InvariantError("negative class size");
    extents_.push_back(s + 1);
  }
  strides_.assign(extents_.size(), 1);
  const auto checked_mul = [](std::size_t a, std::size_t b) {
    if (b != 0 && a > kMaxGridCells / b) {
      throw TooLarge("type grid exceeds " + std::to_string(kMaxGridCells) +
                     " cells");
    }
    return a * b;
  };
  for (int i = static_cast<int>(extents_.size()) - 2; i >= 0; --i) {
    const auto u = static_cast<std::size_t>(i);
    strides_[u] =
        checked_mul(strides_[u + 1], static_cast<std::size_t>(extents_[u + 1]));
  }
  cell_count_ =
      checked_mul(strides_[0], static_cast<std::size_t>(extents_[0]));
}

std::size_t TypeGrid::flat(std::span<const int> counts) const {
  if (counts.size() != extents_.size()) {
    throw InvariantError("type vector length does not match the grid");
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0 || counts[i] >= extents_[i]) {
      throw InvariantError("type vector count out of range");
    }
    idx += static_cast<std::size_t>(counts[i]) * strides_[i];
  }
  return idx;
}

TypeVector TypeGrid::vector_at(std::size_t flat_index) const {
  TypeVector t;
  t.counts.resize(extents_.size());
  for (std::size_t i = 0; i < extents_.size(); ++i) {
    t.counts[i] = static_cast<int>(flat_index / strides_[i]);
    flat_index %= strides_[i];
  }
  return t;
}

TypeValueTable build_type_value_table(const ValuationOracle& oracle,
                                      const TypePartition& types) {
  types.validate_partition_of(oracle.player_count());
  TypeGrid grid = TypeGrid::for_partition(types);
  const int k = grid.dimension_count();

  std::vector<Value> values(grid.cell_count());
  std::vector<int> counts(static_cast<std::size_t>(k), 0);
  std::vector<int> members;
  for (std::size_t cell = 0; cell < grid.cell_count(); ++cell) {
    // Canonical representative: the counts[i] lowest-indexed players of
    // each class.
    members.clear();
    for (int i = 0; i < k; ++i) {
      const auto& cls = types.classes[static_cast<std::size_t>(i)].members();
      members.insert(members.end(), cls.begin(),
                     cls.begin() + counts[static_cast<std::size_t>(i)]);
    }
    values[cell] = oracle.value(Coalition(members));

    // Odometer step, last coordinate fastest.
    for (int i = k - 1; i >= 0; --i) {
      auto& c = counts[static_cast<std::size_t>(i)];
      if (++c < grid.extent(i)) break;
      c = 0;
    }
  }
  if (values[0] != 0) {
    throw InvariantError("oracle violates v(empty) = 0");
  }
  return TypeValueTable{std::move(grid), std::move(values)};
}

std::pair<Value, DPTables> solve_typed_dp(const TypeValueTable& table,
                                          const TypePartition& types) {
  const TypeGrid& grid = table.grid;
  if (grid != TypeGrid::for_partition(types)) {
    throw InvariantError("value table grid does not match the type classes");
  }
  if (table.values.size() != grid.cell_count()) {
    throw InvariantError("value table is not total on the grid");
  }
  const int k = grid.dimension_count();

  DPTables tables{grid, std::vector<Value>(grid.cell_count(), 0),
                  std::vector<std::size_t>(grid.cell_count(), 0)};
  std::vector<Value>& q = tables.best;

  std::vector<int> a(static_cast<std::size_t>(k), 0);
  std::vector<int> b(static_cast<std::size_t>(k), 0);
  // suffix_full[i] = flat weight of coordinates i..k-1 all set to a_j; used
  // to update the flat index of b in O(1) on each odometer carry.
  std::vector<std::size_t> suffix_full(static_cast<std::size_t>(k) + 1, 0);

  for (std::size_t fa = 1; fa < grid.cell_count(); ++fa) {
    // Advance a (lexicographic odometer), keeping fa == flat(a).
    for (int i = k - 1; i >= 0; --i) {
      auto& c = a[static_cast<std::size_t>(i)];
      if (++c < grid.extent(i)) break;
      c = 0;
    }
    for (int i = k - 1; i >= 0; --i) {
      const auto u = static_cast<std::size_t>(i);
      suffix_full[u] = suffix_full[u + 1] +
                       static_cast<std::size_t>(a[u]) * grid.stride(i);
    }

    Value best = std::numeric_limits<Value>::min();
    std::size_t best_block = 0;
    std::fill(b.begin(), b.end(), 0);
    std::size_t fb = 0;
    // Enumerate every nonzero b <= a in ascending flat order; strict
    // improvement keeps the lexicographically smallest maximizer.
    while (true) {
      int i = k - 1;
      while (i >= 0 && b[static_cast<std::size_t>(i)] ==
                           a[static_cast<std::size_t>(i)]) {
        b[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++b[static_cast<std::size_t>(i)];
      fb += grid.stride(i) - suffix_full[static_cast<std::size_t>(i) + 1];

      const Value candidate = q[fa - fb] + table.values[fb];
      if (candidate > best) {
        best = candidate;
        best_block = fb;
      }
    }
    q[fa] = best;
    tables.choice[fa] = best_block;
  }
  return {q[grid.cell_count() - 1], std::move(tables)};
}

CoalitionStructure reconstruct_structure(const DPTables& tables,
                                         const TypePartition& types) {
  const TypeGrid& grid = tables.grid;
  if (grid != TypeGrid::for_partition(types)) {
    throw CorruptTables("tables do not match the type classes");
  }
  const int k = grid.dimension_count();

  // Next unused member per class; members are taken in ascending order.
  std::vector<int> taken(static_cast<std::size_t>(k), 0);
  CoalitionStructure result;

  std::size_t cell = grid.cell_count() - 1;
  while (cell != 0) {
    const std::size_t block_flat = tables.choice[cell];
    if (block_flat == 0 || block_flat > cell) {
      throw CorruptTables("choice chain does not reach the base cell");
    }
    const TypeVector remaining = grid.vector_at(cell);
    const TypeVector block = grid.vector_at(block_flat);
    std::vector<int> members;
    for (int i = 0; i < k; ++i) {
      const auto u = static_cast<std::size_t>(i);
      if (block.counts[u] > remaining.counts[u]) {
        throw CorruptTables("chosen block exceeds the remaining type vector");
      }
      const auto& cls = types.classes[u].members();
      for (int j = 0; j < block.counts[u]; ++j) {
        members.push_back(cls[static_cast<std::size_t>(taken[u]++)]);
      }
    }
    result.blocks.emplace_back(std::move(members));
    cell -= block_flat;
  }

  for (int i = 0; i < k; ++i) {
    if (taken[static_cast<std::size_t>(i)] !=
        types.classes[static_cast<std::size_t>(i)].size()) {
      throw CorruptTables("chain blocks do not sum to the full type vector");
    }
  }
  return result;
}

}  // namespace optcs
