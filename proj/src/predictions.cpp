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

#include "deplen/predictions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "deplen/error.hpp"
#include "deplen/metrics.hpp"

namespace deplen {
namespace {

void ForEachFeasible(const DepTree& tree, const PrecedenceConstraint& constraint,
                     const std::function<void(const Linearization&)>& visit) {
  std::vector<int> order(tree.size());
  std::iota(order.begin(), order.end(), 1);
  do {
    Linearization lin = Linearization::FromOrder(order);
    if (constraint.SatisfiedBy(lin)) visit(lin);
  } while (std::next_permutation(order.begin(), order.end()));
}

bool IsOptimal(const MlaResult& result, const Linearization& lin) {
  return std::binary_search(result.optimal_orders.begin(), result.optimal_orders.end(),
                            lin);
}

// First violating order, if any.
std::optional<Linearization> FindViolation(const Expectation& e, const Scenario& s,
                                           const MlaResult& result) {
  using Kind = Expectation::Kind;
  auto subject_pos = [&](const Linearization& lin) { return lin.position(e.subject); };
  for (const Linearization& lin : result.optimal_orders) {
    const int p = subject_pos(lin);
    switch (e.kind) {
      case Kind::kSubjectAtPositionsExactly:
        if (std::find(e.positions.begin(), e.positions.end(), p) == e.positions.end()) {
          return lin;
        }
        break;
      case Kind::kPrecedesAll:
        for (int o : e.others) {
          if (p > lin.position(o)) return lin;
        }
        break;
      case Kind::kFollowsAll:
        for (int o : e.others) {
          if (p < lin.position(o)) return lin;
        }
        break;
      case Kind::kImmediatelyAfter:
        if (p != lin.position(e.others.at(0)) + 1) return lin;
        break;
      case Kind::kImmediatelyBefore:
        if (p != lin.position(e.others.at(0)) - 1) return lin;
        break;
      case Kind::kAllOrdersEqual:
        break;
    }
  }

  // The remaining kinds also constrain orders outside the optimal set.
  std::optional<Linearization> missing;
  if (e.kind == Kind::kSubjectAtPositionsExactly || e.kind == Kind::kAllOrdersEqual) {
    ForEachFeasible(s.tree, s.constraint, [&](const Linearization& lin) {
      if (missing) return;
      const bool wanted =
          e.kind == Kind::kAllOrdersEqual ||
          std::find(e.positions.begin(), e.positions.end(), subject_pos(lin)) !=
              e.positions.end();
      if (wanted && !IsOptimal(result, lin)) missing = lin;
    });
  }
  return missing;
}

std::string Label(const std::vector<std::string>& labels, int token) {
  return labels.at(token - 1);
}

std::string JoinLabels(const std::vector<std::string>& labels,
                       const std::vector<int>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ",";
    out += Label(labels, tokens[i]);
  }
  return out;
}

// Direction of `head` relative to `dependents` across all optima.
std::string ObservedDirection(const MlaResult& result, int head,
                              const std::vector<int>& dependents) {
  bool all_first = true;
  bool all_last = true;
  for (const Linearization& lin : result.optimal_orders) {
    for (int d : dependents) {
      if (lin.position(head) > lin.position(d)) all_first = false;
      if (lin.position(head) < lin.position(d)) all_last = false;
    }
  }
  if (all_first) return "head-first";
  if (all_last) return "head-last";
  return "mixed";
}

std::vector<int> Range(int first, int count) {
  std::vector<int> out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

}  // namespace

std::string Expectation::Describe(const std::vector<std::string>& labels) const {
  const std::string who = subject > 0 ? labels.at(subject - 1) : std::string();
  switch (kind) {
    case Kind::kSubjectAtPositionsExactly: {
      std::string pos;
      for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i > 0) pos += " or ";
        pos += std::to_string(positions[i]);
      }
      return "optima are exactly the orders with " + who + " at position " + pos;
    }
    case Kind::kPrecedesAll:
      return who + " precedes " + JoinLabels(labels, others) + " in every optimum";
    case Kind::kFollowsAll:
      return who + " follows " + JoinLabels(labels, others) + " in every optimum";
    case Kind::kImmediatelyAfter:
      return who + " immediately after " + JoinLabels(labels, others) +
             " in every optimum";
    case Kind::kImmediatelyBefore:
      return who + " immediately before " + JoinLabels(labels, others) +
             " in every optimum";
    case Kind::kAllOrdersEqual:
      return "all orders cost the same";
  }
  return "";
}

const char* VerbPositionName(VerbPosition position) {
  switch (position) {
    case VerbPosition::kInitial: return "initial";
    case VerbPosition::kMedial: return "medial";
    case VerbPosition::kFinal: return "final";
  }
  return "";
}

const char* AuxiliaryBaseName(AuxiliaryBase base) {
  return base == AuxiliaryBase::kSov ? "SOV" : "VSO";
}

std::string RenderOrder(const Linearization& lin,
                        const std::vector<std::string>& labels) {
  std::string out;
  for (int t : lin.order()) {
    if (!out.empty()) out += ' ';
    out += Label(labels, t);
  }
  return out;
}

PredictionReport RunScenario(const Scenario& scenario, const CostFunction& g) {
  PredictionReport report;
  report.name = scenario.name;
  report.asserted = scenario.asserted;
  report.labels = scenario.labels;
  report.witness = ConstrainedMla(scenario.tree, scenario.constraint, Unit::kWords, g);
  report.holds = true;
  for (const Expectation& e : scenario.expectations) {
    if (!report.expectation.empty()) report.expectation += "; ";
    report.expectation += e.Describe(scenario.labels);
    if (report.counterexample) continue;
    if (auto bad = FindViolation(e, scenario, report.witness)) {
      report.holds = false;
      report.counterexample = std::move(bad);
    }
  }
  return report;
}

Scenario StarScenario(int k) {
  if (k < 1 || k > 7) {
    throw Error(ErrorCode::kRange, "star scenarios need 1 <= k <= 7, got " +
                                       std::to_string(k));
  }
  std::vector<int> lengths(k + 1, 1);
  std::vector<int> heads(k + 1, 1);
  heads[0] = kRootHead;
  Scenario s{"star k=" + std::to_string(k), BuildTree(lengths, heads), {}, {}, {}, true};
  s.labels.push_back("H");
  for (int i = 1; i <= k; ++i) s.labels.push_back("d" + std::to_string(i));
  if (k == 1) {
    s.expectations.push_back({Expectation::Kind::kAllOrdersEqual, 0, {}, {}});
  } else {
    std::vector<int> medians{(k + 2) / 2};
    if ((k + 2) % 2 == 1) medians.push_back((k + 3) / 2);
    s.expectations.push_back(
        {Expectation::Kind::kSubjectAtPositionsExactly, 1, {}, medians});
  }
  return s;
}

PredictionReport CheckStarPlacement(int k, const CostFunction& g) {
  return RunScenario(StarScenario(k), g);
}

Scenario VerbArgumentScenario(VerbPosition position, int m) {
  if (m < 1 || m > 2) {
    throw Error(ErrorCode::kRange, "arguments carry 1 or 2 dependents, got " +
                                       std::to_string(m));
  }
  // 1 = V, 2 = S, 3.. = S's dependents, then O and its dependents.
  const int subject = 2;
  const int object = 3 + m;
  const int n = 3 + 2 * m;
  std::vector<int> heads(n);
  heads[0] = kRootHead;
  heads[subject - 1] = 1;
  heads[object - 1] = 1;
  const std::vector<int> subject_deps = Range(subject + 1, m);
  const std::vector<int> object_deps = Range(object + 1, m);
  for (int d : subject_deps) heads[d - 1] = subject;
  for (int d : object_deps) heads[d - 1] = object;

  Scenario s{std::string("verb-") + VerbPositionName(position) + " m=" +
                 std::to_string(m),
             BuildTree(std::vector<int>(n, 1), heads), {}, {}, {}, true};
  s.labels = {"V", "S"};
  for (int i = 1; i <= m; ++i) s.labels.push_back("s" + std::to_string(i));
  s.labels.push_back("O");
  for (int i = 1; i <= m; ++i) s.labels.push_back("o" + std::to_string(i));

  std::vector<int> subject_block{subject};
  subject_block.insert(subject_block.end(), subject_deps.begin(), subject_deps.end());
  std::vector<int> object_block{object};
  object_block.insert(object_block.end(), object_deps.begin(), object_deps.end());
  using Kind = Expectation::Kind;
  switch (position) {
    case VerbPosition::kInitial:
      s.constraint.blocks = {{1}, subject_block, object_block};
      s.expectations = {{Kind::kPrecedesAll, subject, subject_deps, {}},
                        {Kind::kPrecedesAll, object, object_deps, {}}};
      break;
    case VerbPosition::kFinal:
      s.constraint.blocks = {subject_block, object_block, {1}};
      s.expectations = {{Kind::kFollowsAll, subject, subject_deps, {}},
                        {Kind::kFollowsAll, object, object_deps, {}}};
      break;
    case VerbPosition::kMedial:
      s.constraint.blocks = {subject_block, {1}, object_block};
      s.expectations = {{Kind::kPrecedesAll, object, object_deps, {}}};
      s.asserted = false;
      break;
  }
  return s;
}

PredictionReport CheckVerbArgumentBranching(VerbPosition position, int m,
                                            const CostFunction& g) {
  const Scenario s = VerbArgumentScenario(position, m);
  PredictionReport report = RunScenario(s, g);
  const int subject = 2;
  const int object = 3 + m;
  report.detail = "S: " + ObservedDirection(report.witness, subject, Range(subject + 1, m)) +
                  ", O: " + ObservedDirection(report.witness, object, Range(object + 1, m));
  return report;
}

Scenario AuxiliaryScenario(AuxiliaryBase base) {
  // 1 = M, 2 = S, 3 = s, 4 = O, 5 = o, 6 = A.
  const std::vector<int> heads{kRootHead, 1, 2, 1, 4, 1};
  Scenario s{std::string("auxiliary ") + AuxiliaryBaseName(base),
             BuildTree(std::vector<int>(6, 1), heads), {}, {}, {}, true};
  s.labels = {"M", "S", "s", "O", "o", "A"};
  if (base == AuxiliaryBase::kSov) {
    s.constraint.blocks = {{2, 3}, {4, 5}, {1}};
    s.expectations = {{Expectation::Kind::kImmediatelyAfter, 6, {1}, {}}};
  } else {
    s.constraint.blocks = {{1}, {2, 3}, {4, 5}};
    s.expectations = {{Expectation::Kind::kImmediatelyBefore, 6, {1}, {}}};
  }
  return s;
}

PredictionReport CheckAuxiliaryPlacement(AuxiliaryBase base, const CostFunction& g) {
  return RunScenario(AuxiliaryScenario(base), g);
}

PredictionReport AntilocalityDemo(int adjectives, bool mirrored, const CostFunction& g) {
  if (adjectives < 1 || adjectives > 2) {
    throw Error(ErrorCode::kRange, "the demonstration uses 1 or 2 adjectives per noun");
  }
  // 1 = V, 2 = S, then S's adjectives, then O and its adjectives.
  const int subject = 2;
  const int object = 3 + adjectives;
  const int n = 3 + 2 * adjectives;
  const std::vector<int> subject_adjs = Range(subject + 1, adjectives);
  const std::vector<int> object_adjs = Range(object + 1, adjectives);
  std::vector<int> heads(n);
  heads[0] = kRootHead;
  heads[subject - 1] = 1;
  heads[object - 1] = 1;
  for (int a : subject_adjs) heads[a - 1] = subject;
  for (int a : object_adjs) heads[a - 1] = object;
  const DepTree tree = BuildTree(std::vector<int>(n, 1), heads);

  std::vector<std::string> labels{"V", "S"};
  for (int i = 1; i <= adjectives; ++i) labels.push_back("a" + std::to_string(i));
  labels.push_back("O");
  for (int i = 1; i <= adjectives; ++i) labels.push_back("b" + std::to_string(i));

  auto phrase_final = [](int noun, const std::vector<int>& adjs) {
    std::vector<int> out(adjs);
    out.push_back(noun);
    return out;
  };
  auto phrase_central = [](int noun, const std::vector<int>& adjs) {
    std::vector<int> out{adjs[0], noun};
    out.insert(out.end(), adjs.begin() + 1, adjs.end());
    return out;
  };
  auto sentence = [&](std::vector<int> s, const std::vector<int>& o) {
    s.insert(s.end(), o.begin(), o.end());
    s.push_back(1);
    if (mirrored) std::reverse(s.begin(), s.end());
    return Linearization::FromOrder(std::move(s));
  };

  PrecedenceConstraint blocks;
  std::vector<int> subject_block{subject};
  subject_block.insert(subject_block.end(), subject_adjs.begin(), subject_adjs.end());
  std::vector<int> object_block{object};
  object_block.insert(object_block.end(), object_adjs.begin(), object_adjs.end());
  blocks.blocks = {subject_block, object_block, {1}};
  if (mirrored) std::reverse(blocks.blocks.begin(), blocks.blocks.end());

  PredictionReport report;
  report.name = std::string("antilocality ") + (mirrored ? "VOS" : "SOV") +
                " adjectives=" + std::to_string(adjectives);
  report.labels = labels;
  report.witness = ConstrainedMla(tree, blocks, Unit::kWords, g);
  const std::string noun_edge = mirrored ? "block-initial" : "block-final";
  report.expectation = "noun " + noun_edge +
                       " within S and O costs strictly less than noun central";

  const Linearization edge_order =
      sentence(phrase_final(subject, subject_adjs), phrase_final(object, object_adjs));
  const Rational edge_total = ArrangementCost(tree, edge_order, Unit::kWords, g);
  if (adjectives == 1) {
    report.asserted = false;
    report.holds = true;
    report.detail = "vacuous: a two-token phrase has no central position (noun " +
                    noun_edge + " total " + FormatDecimal(edge_total) + ")";
    return report;
  }

  const Linearization central_order = sentence(phrase_central(subject, subject_adjs),
                                               phrase_central(object, object_adjs));
  const Rational central_total = ArrangementCost(tree, central_order, Unit::kWords, g);

  // Adjective-noun lengths, longest first.
  auto inner_lengths = [&](const Linearization& lin) {
    std::vector<std::int64_t> out;
    for (const EdgeLength& e : MeasureEdges(tree, lin, Unit::kWords)) {
      if (e.edge.head != 1) out.push_back(e.scaled);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
  };
  const auto edge_inner = inner_lengths(edge_order);
  const auto central_inner = inner_lengths(central_order);
  bool no_shorter = true;
  for (std::size_t i = 0; i < edge_inner.size(); ++i) {
    if (edge_inner[i] < central_inner[i]) no_shorter = false;
  }
  report.holds = edge_total < central_total && no_shorter;
  if (!report.holds) report.counterexample = central_order;
  report.detail = "noun " + noun_edge + " [" + RenderOrder(edge_order, labels) +
                  "] total " + FormatDecimal(edge_total) + "; noun central [" +
                  RenderOrder(central_order, labels) + "] total " +
                  FormatDecimal(central_total) +
                  (no_shorter ? "; inner dependencies no shorter"
                              : "; inner dependencies shorter");
  return report;
}

std::vector<PredictionReport> RunDefaultPredictions(const CostFunction& g) {
  std::vector<PredictionReport> out;
  for (int k = 1; k <= 6; ++k) out.push_back(CheckStarPlacement(k, g));
  for (VerbPosition p : {VerbPosition::kInitial, VerbPosition::kFinal,
                         VerbPosition::kMedial}) {
    for (int m : {1, 2}) out.push_back(CheckVerbArgumentBranching(p, m, g));
  }
  out.push_back(CheckAuxiliaryPlacement(AuxiliaryBase::kSov, g));
  out.push_back(CheckAuxiliaryPlacement(AuxiliaryBase::kVso, g));
  out.push_back(AntilocalityDemo(2, false, g));
  out.push_back(AntilocalityDemo(2, true, g));
  out.push_back(AntilocalityDemo(1, false, g));
  return out;
}

}  // namespace deplen
