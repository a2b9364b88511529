// Copyright 2026 The deplen Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Minimum linear arrangement of dependency trees.
//
// BruteForceMla scores every permutation (optionally filtered by precedence
// and block constraints) and returns the exact minimum together with every
// order attaining it. ProjectiveMla builds a minimum projective arrangement
// directly for Words/identity and falls back to enumerating projective
// orders otherwise.

#ifndef DEPLEN_OPTIMIZER_HPP_
#define DEPLEN_OPTIMIZER_HPP_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "deplen/cost_models.hpp"
#include "deplen/rational.hpp"
#include "deplen/tree.hpp"

namespace deplen {

inline constexpr int kMaxBruteForceN = 10;
inline constexpr int kMaxProjectiveEnumerationN = 12;

struct MlaResult {
  Rational min_cost;
  // Sorted lexicographically by Linearization::order(). For exhaustive
  // searches this is the full optimal set; ProjectiveMla's constructive
  // path stores a single optimum.
  std::vector<Linearization> optimal_orders;
  std::uint64_t searched = 0;

  const Linearization& representative() const { return optimal_orders.front(); }
};

struct PrecedenceConstraint {
  // (a, b): token a must precede token b.
  std::vector<std::pair<int, int>> pairs;
  // Each block must occupy consecutive positions, and block i must lie
  // entirely before block i + 1. Tokens not named in any block are free.
  std::vector<std::vector<int>> blocks;

  bool empty() const { return pairs.empty() && blocks.empty(); }
  bool SatisfiedBy(const Linearization& lin) const;
};

struct SearchOptions {
  int max_n = kMaxBruteForceN;
  // Worker threads; the search is split by the token placed first.
  int jobs = 1;
};

// Errors: kTooLarge (n > options.max_n or max_n > 10), kInvalidArgument
// (constraint names unknown tokens or a token in two blocks),
// kInfeasibleConstraints, kDomain (g undefined at a length that occurs).
MlaResult BruteForceMla(const DepTree& tree, Unit unit, const CostFunction& g,
                        const PrecedenceConstraint* constraint = nullptr,
                        const SearchOptions& options = {});

inline MlaResult ConstrainedMla(const DepTree& tree,
                                const PrecedenceConstraint& constraint, Unit unit,
                                const CostFunction& g,
                                const SearchOptions& options = {}) {
  return BruteForceMla(tree, unit, g, &constraint, options);
}

// Calls `visit` once per projective linearization. n <= 12 (kTooLarge).
void ForEachProjective(const DepTree& tree,
                       const std::function<void(const Linearization&)>& visit);
std::vector<Linearization> EnumerateProjective(const DepTree& tree);

// Words unit, g = identity.
MlaResult ProjectiveMla(const DepTree& tree);
// Any unit and g; anything other than Words/identity enumerates the
// projective orders (n <= 12).
MlaResult ProjectiveMla(const DepTree& tree, Unit unit, const CostFunction& g);

// Total cost sum_e g(d_e) of one linearization.
Rational ArrangementCost(const DepTree& tree, const Linearization& lin, Unit unit,
                         const CostFunction& g);

}  // namespace deplen

#endif  // DEPLEN_OPTIMIZER_HPP_
