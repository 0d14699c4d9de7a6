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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "optcs/core.hpp"

namespace optcs {

// Partition of the players into classes of strategically equivalent players
// (every pair in a class is interchangeable in every coalition's value).
struct TypePartition {
  std::vector<Coalition> classes;

  int class_count() const { return static_cast<int>(classes.size()); }
  int player_count() const;
  std::vector<int> sizes() const;
  // Throws NotAPartition unless the classes partition {0..n-1} with no
  // empty class.
  void validate_partition_of(int n) const;
};

// Per-class member counts (t_1, ..., t_k) identifying a coalition type.
struct TypeVector {
  std::vector<int> counts;

  friend bool operator==(const TypeVector&, const TypeVector&) = default;
  friend auto operator<=>(const TypeVector&, const TypeVector&) = default;
};

// Indexing over the grid {0..|T_1|} x ... x {0..|T_k|} of type vectors.
// Flat indices are mixed-radix with the first class most significant, so
// ascending flat order is lexicographic and refines the componentwise
// order: whenever b <= a componentwise and b != a, flat(b) < flat(a).
class TypeGrid {
 public:
  explicit TypeGrid(std::vector<int> class_sizes);
  static TypeGrid for_partition(const TypePartition& types) {
    return TypeGrid(types.sizes());
  }

  int dimension_count() const { return static_cast<int>(extents_.size()); }
  // Number of admissible values of coordinate i, i.e. |T_i| + 1.
  int extent(int i) const { return extents_[static_cast<std::size_t>(i)]; }
  std::size_t stride(int i) const {
    return strides_[static_cast<std::size_t>(i)];
  }
  std::size_t cell_count() const { return cell_count_; }

  std::size_t flat(std::span<const int> counts) const;
  TypeVector vector_at(std::size_t flat_index) const;

  friend bool operator==(const TypeGrid&, const TypeGrid&) = default;

 private:
  std::vector<int> extents_;          // |T_i| + 1
  std::vector<std::size_t> strides_;  // product of trailing extents
  std::size_t cell_count_ = 1;
};

// Characteristic-function value of every coalition type, total on the grid.
struct TypeValueTable {
  TypeGrid grid;
  std::vector<Value> values;  // indexed by TypeGrid flat index

  Value at(std::size_t flat_index) const { return values[flat_index]; }
  Value at(const TypeVector& t) const { return values[grid.flat(t.counts)]; }
};

// Optimal-welfare table Q plus reconstruction data R. choice[a] holds the
// flat index of the block type chosen at cell a (0 at the base cell); the
// predecessor of a is a - choice[a], recoverable as a flat-index subtraction
// because the grid order is componentwise-compatible.
struct DPTables {
  TypeGrid grid;
  std::vector<Value> best;           // Q
  std::vector<std::size_t> choice;   // chosen block type per cell

  // The R entry of a cell: (predecessor flat index, chosen block flat index).
  std::pair<std::size_t, std::size_t> r_entry(std::size_t flat_index) const {
    return {flat_index - choice[flat_index], choice[flat_index]};
  }
};

// Fills the type-value table by querying the oracle once per grid cell with
// a canonical representative (the t_i lowest-indexed members of each class).
// Issues exactly prod(|T_i|+1) queries.
TypeValueTable build_type_value_table(const ValuationOracle& oracle,
                                      const TypePartition& types);

// Dynamic program over coalition types: for each cell a in ascending flat
// (lexicographic) order,
//   Q(a) = max over nonzero b <= a of Q(a - b) + V(b),  Q(0) = 0,
// breaking ties toward the lexicographically smallest block type. Returns
// the optimum welfare Q(|T_1|, ..., |T_k|) together with the filled tables.
std::pair<Value, DPTables> solve_typed_dp(const TypeValueTable& table,
                                          const TypePartition& types);

// Walks the choice chain from the full-grid cell and materializes one block
// per chain entry, assigning members within each class by ascending player
// index. Throws CorruptTables when the chain does not decompose the full
// type vector.
CoalitionStructure reconstruct_structure(const DPTables& tables,
                                         const TypePartition& types);

}  // namespace optcs
