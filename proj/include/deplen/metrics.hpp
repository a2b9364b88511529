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

// Dependency length measurement.
//
// Words: the length of an edge is the difference of the positions of its
// endpoints, so adjacent words are at distance 1.
//
// Characters: words are laid out with one space between them. The word at
// position k starts at s_k = 1 + sum_{j<k} (lambda_j + 1) and its center is
// s_k + (lambda_k + 1)/2 - 1. Edge length is the distance between centers.
// Centers and lengths are kept in half-units so all arithmetic is integral.

#ifndef DEPLEN_METRICS_HPP_
#define DEPLEN_METRICS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "deplen/cost_models.hpp"
#include "deplen/rational.hpp"
#include "deplen/tree.hpp"

namespace deplen {

struct EdgeLength {
  Edge edge;
  Unit unit = Unit::kWords;
  // Positions for Words, half-units for Characters.
  std::int64_t scaled = 0;

  Rational value() const {
    return unit == Unit::kWords ? Rational(scaled) : FromHalfUnits(scaled);
  }
};

// Center of every token (indexed by token - 1) in half-units.
std::vector<std::int64_t> WordCentersHalfUnits(const DepTree& tree,
                                               const Linearization& lin);

// Throws kUnknownEdge if the edge is not in the tree.
EdgeLength MeasureEdge(const DepTree& tree, const Linearization& lin,
                       const Edge& edge, Unit unit);

// All n - 1 edges in tree.edges() order.
std::vector<EdgeLength> MeasureEdges(const DepTree& tree, const Linearization& lin,
                                     Unit unit);

Rational SumLengths(const DepTree& tree, const Linearization& lin, Unit unit);

// Counts of Words-unit lengths.
class LengthHistogram {
 public:
  void Add(const DepTree& tree, const Linearization& lin);
  void Merge(const LengthHistogram& other);

  const std::map<std::int64_t, std::int64_t>& counts() const { return counts_; }
  std::int64_t total_edges() const { return total_edges_; }
  // count(d) / total_edges; kEmptyCorpus when there are no edges.
  Rational proportion(std::int64_t d) const;

 private:
  std::map<std::int64_t, std::int64_t> counts_;
  std::int64_t total_edges_ = 0;
};

// Histogram over a corpus; lins[i] linearizes trees[i].
// Errors: kSizeMismatch, kEmptyCorpus (no edges at all).
LengthHistogram BuildHistogram(std::span<const DepTree> trees,
                               std::span<const Linearization> lins);

struct CostReport {
  int n = 0;
  Unit unit = Unit::kWords;
  Rational sum_lengths;
  // (n - 1) * sum_d p(d) g(d)
  Rational D;
  // sum over edges of g(d_e); always equal to D.
  Rational direct_sum;
  // Words unit only.
  std::optional<LengthHistogram> histogram;
};

// Throws kDomain if g is undefined at an observed length.
CostReport ComputeCost(const DepTree& tree, const Linearization& lin,
                       const CostFunction& g, Unit unit = Unit::kWords);

// g(head token, dependent token, d)
using GeneralizedCost =
    std::function<Rational(const Token& head, const Token& dependent, const Rational& d)>;

Rational GeneralizedCostSum(const DepTree& tree, const Linearization& lin,
                            const GeneralizedCost& g, Unit unit = Unit::kWords);

}  // namespace deplen

#endif  // DEPLEN_METRICS_HPP_
