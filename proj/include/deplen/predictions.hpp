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

// Word-order placement predictions of dependency length minimization, each
// encoded as a small tree, a placement constraint and an expectation about
// the full set of optimal orders, and checked by exhaustive search.

#ifndef DEPLEN_PREDICTIONS_HPP_
#define DEPLEN_PREDICTIONS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "deplen/cost_models.hpp"
#include "deplen/optimizer.hpp"
#include "deplen/tree.hpp"

namespace deplen {

// One condition every optimal order must meet.
struct Expectation {
  enum class Kind {
    // The subject token sits at one of `positions` in every optimum, and
    // every feasible order with the subject there is optimal.
    kSubjectAtPositionsExactly,
    // The subject precedes every token in `others`.
    kPrecedesAll,
    // The subject follows every token in `others`.
    kFollowsAll,
    // The subject is at the position right after others[0].
    kImmediatelyAfter,
    // The subject is at the position right before others[0].
    kImmediatelyBefore,
    // Every feasible order has the same cost.
    kAllOrdersEqual,
  };

  Kind kind = Kind::kAllOrdersEqual;
  int subject = 0;
  std::vector<int> others;
  std::vector<int> positions;

  std::string Describe(const std::vector<std::string>& labels) const;
};

struct Scenario {
  std::string name;
  DepTree tree;
  PrecedenceConstraint constraint;
  std::vector<Expectation> expectations;
  // Display label of each token (indexed by token - 1).
  std::vector<std::string> labels;
  // Report-only scenarios do not count towards pass/fail.
  bool asserted = true;
};

struct PredictionReport {
  std::string name;
  bool asserted = true;
  bool holds = false;
  MlaResult witness;
  std::optional<Linearization> counterexample;
  std::vector<std::string> labels;
  std::string expectation;
  // Free-form findings, e.g. the direction observed in report-only checks.
  std::string detail;
};

enum class VerbPosition { kInitial, kMedial, kFinal };
enum class AuxiliaryBase { kSov, kVso };

const char* VerbPositionName(VerbPosition position);
const char* AuxiliaryBaseName(AuxiliaryBase base);

// Order rendered with token labels, e.g. "s S o O M A".
std::string RenderOrder(const Linearization& lin, const std::vector<std::string>& labels);

// Runs the constrained search and checks every expectation against the full
// optimal set (Words unit).
PredictionReport RunScenario(const Scenario& scenario, const CostFunction& g);

// One head with k dependents. For k >= 2 the head must sit at a median
// position in exactly the optimal orders; for k = 1 all orders tie.
// 1 <= k <= 7, kRange otherwise.
Scenario StarScenario(int k);
PredictionReport CheckStarPlacement(int k,
                                    const CostFunction& g = CostFunction::Identity());

// Verb with two argument heads, each carrying m in {1, 2} dependents. The
// verb block is fixed first, medial or last; arguments stay contiguous.
// Verb-initial expects each argument head before its dependents, verb-final
// after them. Verb-medial is report-only.
Scenario VerbArgumentScenario(VerbPosition position, int m);
PredictionReport CheckVerbArgumentBranching(
    VerbPosition position, int m = 1, const CostFunction& g = CostFunction::Identity());

// Main verb M heading the subject, object and auxiliary A; subject and
// object carry one dependent each. SOV fixes S < O < M, VSO fixes
// M < S < O; A is free. SOV expects A right after M, VSO right before.
Scenario AuxiliaryScenario(AuxiliaryBase base);
PredictionReport CheckAuxiliaryPlacement(
    AuxiliaryBase base, const CostFunction& g = CostFunction::Identity());

// Subject and object noun phrases of `adjectives` + 1 tokens, then the
// verb (or the mirror image, verb first). Compares the total cost with each
// noun at the verb side of its phrase (adjectives before the noun in SOV)
// against the noun in the middle of its phrase. Holds iff
// the edge placement is strictly cheaper overall while its adjective-noun
// dependencies are individually no shorter. adjectives must be 1 or 2;
// with 1 the comparison is vacuous and reported, not asserted.
PredictionReport AntilocalityDemo(int adjectives = 2, bool mirrored = false,
                                  const CostFunction& g = CostFunction::Identity());

// The default suite run by the `predict` command.
std::vector<PredictionReport> RunDefaultPredictions(const CostFunction& g);

}  // namespace deplen

#endif  // DEPLEN_PREDICTIONS_HPP_
