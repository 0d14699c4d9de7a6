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

#include <stdexcept>

namespace optcs {

// Base class of all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Block list is not an exhaustive, disjoint partition of the player set.
struct NotAPartition : Error { using Error::Error; };

// A coalition references a player outside {0, ..., n-1}.
struct PlayerOutOfRange : Error { using Error::Error; };

// Evaluating the coalition value is NP-hard and the input exceeds the
// exact-search cap (independent-set games only).
struct IntractableEvaluation : Error { using Error::Error; };

// The game class carries no syntactic rule for grouping equivalent players.
struct NoSyntacticTypes : Error { using Error::Error; };

// Threshold wrapper over a game that is not monotone.
struct NonMonotoneInner : Error { using Error::Error; };

// Reconstruction tables whose back-pointer chain does not add up.
struct CorruptTables : Error { using Error::Error; };

// Player count exceeds an enumeration cap.
struct TooManyPlayers : Error { using Error::Error; };

// Graph exceeds an exact-search cap.
struct TooLarge : Error { using Error::Error; };

// Operation requires a connected graph.
struct Disconnected : Error { using Error::Error; };

// Instance admits no exact solve within the configured caps and no
// approximation with a guarantee.
struct Unsolvable : Error { using Error::Error; };

// Total weight not divisible by the requested part count.
struct NotDivisible : Error { using Error::Error; };

// Clique reduction input has a vertex adjacent to all others.
struct UniversalVertex : Error { using Error::Error; };

// Malformed document: missing or mistyped fields.
struct SchemaError : Error { using Error::Error; };

// Well-formed document violating a game-class invariant.
struct InvariantError : Error { using Error::Error; };

}  // namespace optcs
