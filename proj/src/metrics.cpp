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

#include "deplen/metrics.hpp"

#include <cstdlib>

#include "deplen/error.hpp"

namespace deplen {
namespace {

void CheckSizes(const DepTree& tree, const Linearization& lin) {
  if (lin.size() != tree.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "linearization has " + std::to_string(lin.size()) +
                    " positions for a tree of " + std::to_string(tree.size()) +
                    " tokens");
  }
}

std::int64_t ScaledLength(const Edge& e, const Linearization& lin,
                          const std::vector<std::int64_t>& centers, Unit unit) {
  if (unit == Unit::kWords) {
    return std::abs(lin.position(e.head) - lin.position(e.dependent));
  }
  return std::abs(centers[e.head - 1] - centers[e.dependent - 1]);
}

}  // namespace

std::vector<std::int64_t> WordCentersHalfUnits(const DepTree& tree,
                                               const Linearization& lin) {
  CheckSizes(tree, lin);
  std::vector<std::int64_t> centers(tree.size());
  std::int64_t start = 1;
  for (int token : lin.order()) {
    const std::int64_t lambda = tree.token(token).char_length;
    // 2 * (start + (lambda + 1) / 2 - 1)
    centers[token - 1] = 2 * start + lambda - 1;
    start += lambda + 1;
  }
  return centers;
}

EdgeLength MeasureEdge(const DepTree& tree, const Linearization& lin,
                       const Edge& edge, Unit unit) {
  CheckSizes(tree, lin);
  if (!tree.HasEdge(edge)) {
    throw Error(ErrorCode::kUnknownEdge,
                "(" + std::to_string(edge.head) + ", " +
                    std::to_string(edge.dependent) + ") is not an edge of the tree");
  }
  std::vector<std::int64_t> centers;
  if (unit == Unit::kCharacters) centers = WordCentersHalfUnits(tree, lin);
  return EdgeLength{edge, unit, ScaledLength(edge, lin, centers, unit)};
}

std::vector<EdgeLength> MeasureEdges(const DepTree& tree, const Linearization& lin,
                                     Unit unit) {
  CheckSizes(tree, lin);
  std::vector<std::int64_t> centers;
  if (unit == Unit::kCharacters) centers = WordCentersHalfUnits(tree, lin);
  std::vector<EdgeLength> out;
  out.reserve(tree.edges().size());
  for (const Edge& e : tree.edges()) {
    out.push_back(EdgeLength{e, unit, ScaledLength(e, lin, centers, unit)});
  }
  return out;
}

Rational SumLengths(const DepTree& tree, const Linearization& lin, Unit unit) {
  std::int64_t total = 0;
  for (const EdgeLength& e : MeasureEdges(tree, lin, unit)) total += e.scaled;
  return unit == Unit::kWords ? Rational(total) : FromHalfUnits(total);
}

void LengthHistogram::Add(const DepTree& tree, const Linearization& lin) {
  for (const EdgeLength& e : MeasureEdges(tree, lin, Unit::kWords)) {
    ++counts_[e.scaled];
    ++total_edges_;
  }
}

void LengthHistogram::Merge(const LengthHistogram& other) {
  for (const auto& [d, count] : other.counts_) counts_[d] += count;
  total_edges_ += other.total_edges_;
}

Rational LengthHistogram::proportion(std::int64_t d) const {
  if (total_edges_ == 0) throw Error(ErrorCode::kEmptyCorpus, "histogram has no edges");
  const auto it = counts_.find(d);
  return it == counts_.end() ? Rational(0) : MakeRational(it->second, total_edges_);
}

LengthHistogram BuildHistogram(std::span<const DepTree> trees,
                               std::span<const Linearization> lins) {
  if (trees.size() != lins.size()) {
    throw Error(ErrorCode::kSizeMismatch, "one linearization per tree is required");
  }
  LengthHistogram histogram;
  for (std::size_t i = 0; i < trees.size(); ++i) histogram.Add(trees[i], lins[i]);
  if (histogram.total_edges() == 0) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus has no dependencies");
  }
  return histogram;
}

CostReport ComputeCost(const DepTree& tree, const Linearization& lin,
                       const CostFunction& g, Unit unit) {
  const std::vector<EdgeLength> edges = MeasureEdges(tree, lin, unit);
  CostReport report;
  report.n = static_cast<int>(tree.size());
  report.unit = unit;
  report.sum_lengths = 0;
  report.D = 0;
  report.direct_sum = 0;

  // Lengths grouped by value; for Words this is exactly the histogram.
  std::map<std::int64_t, std::int64_t> counts;
  std::int64_t total_scaled = 0;
  for (const EdgeLength& e : edges) {
    ++counts[e.scaled];
    total_scaled += e.scaled;
    report.direct_sum += g(e.value());
  }
  report.sum_lengths = unit == Unit::kWords ? Rational(total_scaled)
                                            : FromHalfUnits(total_scaled);

  const std::int64_t edge_count = static_cast<std::int64_t>(edges.size());
  if (edge_count > 0) {
    Rational expectation = 0;
    for (const auto& [scaled, count] : counts) {
      const Rational d = unit == Unit::kWords ? Rational(scaled) : FromHalfUnits(scaled);
      expectation += MakeRational(count, edge_count) * g(d);
    }
    report.D = Rational(edge_count) * expectation;
  }
  if (report.D != report.direct_sum) {
    throw Error(ErrorCode::kInternal, "grouped and edge-wise costs disagree");
  }
  if (unit == Unit::kWords) {
    LengthHistogram histogram;
    histogram.Add(tree, lin);
    report.histogram = std::move(histogram);
  }
  return report;
}

Rational GeneralizedCostSum(const DepTree& tree, const Linearization& lin,
                            const GeneralizedCost& g, Unit unit) {
  Rational total = 0;
  for (const EdgeLength& e : MeasureEdges(tree, lin, unit)) {
    total += g(tree.token(e.edge.head), tree.token(e.edge.dependent), e.value());
  }
  return total;
}

}  // namespace deplen
