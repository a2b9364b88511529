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


#include <algorithm>
#include <vector>

#include "doctest.h"
#include "deplen/error.hpp"
#include "deplen/predictions.hpp"
#include "oracles.hpp"

using namespace deplen;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return MakeRational(p, q); }

oracle::Tree ToOracle(const DepTree& tree) {
  oracle::Tree t;
  for (int i = 1; i <= static_cast<int>(tree.size()); ++i) {
    t.heads.push_back(tree.head(i));
    t.lengths.push_back(tree.token(i).char_length);
  }
  return t;
}

// Optimal set of a scenario recomputed by filtered enumeration.
oracle::Optimum ScenarioOptimum(const Scenario& s, const CostFunction& g) {
  const auto t = ToOracle(s.tree);
  return oracle::Minimize(
      t, false, [&](const Rational& d) { return g(d); },
      [&](const oracle::Order& o) { return s.constraint.SatisfiedBy(Linearization::FromOrder(o)); });
}

bool Before(const oracle::Order& o, int a, int b) {
  const auto pos = oracle::PositionsOf(o);
  return pos[a - 1] < pos[b - 1];
}

}  // namespace

TEST_CASE("star placement") {
  for (int k = 1; k <= 6; ++k) {
    const auto report = CheckStarPlacement(k);
    CHECK(report.holds);
    CHECK(report.asserted);
    const auto want = oracle::Minimize(ToOracle(StarScenario(k).tree), false,
                                       [](const Rational& d) { return d; });
    CHECK(report.witness.min_cost == want.cost);
    for (const auto& order : want.orders) {
      const int head_pos = oracle::PositionsOf(order)[0];
      if (k >= 2) CHECK(std::abs(2 * head_pos - (k + 2)) <= 1);
    }
  }
  CHECK(CheckStarPlacement(1).witness.min_cost == 1);
  CHECK(CheckStarPlacement(2).witness.min_cost == 2);
  CHECK(CheckStarPlacement(4).witness.min_cost == 6);
  CHECK(CheckStarPlacement(4).witness.optimal_orders.size() == 24);
  CHECK(CheckStarPlacement(3, CostFunction::Power(R(2))).holds);
  try {
    StarScenario(8);
    FAIL("expected range error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRange);
  }
}

TEST_CASE("verb argument branching agrees with the oracle") {
  for (VerbPosition pos : {VerbPosition::kInitial, VerbPosition::kFinal}) {
    for (int m : {1, 2}) {
      for (const auto& g : {CostFunction::Identity(), CostFunction::Power(R(2))}) {
        const Scenario s = VerbArgumentScenario(pos, m);
        const auto report = CheckVerbArgumentBranching(pos, m, g);
        const auto want = ScenarioOptimum(s, g);
        CHECK(report.witness.min_cost == want.cost);
        // Argument heads are tokens 2 and 3 + m; their dependents follow them.
        bool expected = true;
        for (const auto& order : want.orders) {
          for (int head : {2, 3 + m}) {
            for (int dep = head + 1; dep <= head + m; ++dep) {
              const bool head_first = Before(order, head, dep);
              if (head_first != (pos == VerbPosition::kInitial)) expected = false;
            }
          }
        }
        CHECK(report.holds == expected);
        if (m == 1) CHECK(report.holds);
      }
    }
  }
  CHECK_FALSE(VerbArgumentScenario(VerbPosition::kMedial, 1).asserted);
  CHECK(CheckVerbArgumentBranching(VerbPosition::kInitial, 2).witness.min_cost ==
        CheckVerbArgumentBranching(VerbPosition::kFinal, 2).witness.min_cost);
}

TEST_CASE("two dependents per argument tie head-first and head-central") {
  // V S s1 s2 and V s1 S s2 give S-block lengths {1, 2, 1} in both cases.
  const auto report = CheckVerbArgumentBranching(VerbPosition::kInitial, 2);
  CHECK_FALSE(report.holds);
  REQUIRE(report.counterexample.has_value());
  const auto order = report.counterexample->order();
  const auto it = std::find(report.witness.optimal_orders.begin(),
                            report.witness.optimal_orders.end(), *report.counterexample);
  CHECK(it != report.witness.optimal_orders.end());
  CHECK(order.size() == 7);
}

TEST_CASE("auxiliary placement") {
  for (AuxiliaryBase base : {AuxiliaryBase::kSov, AuxiliaryBase::kVso}) {
    const auto report = CheckAuxiliaryPlacement(base);
    CHECK(report.holds);
    const auto want = ScenarioOptimum(AuxiliaryScenario(base), CostFunction::Identity());
    CHECK(report.witness.min_cost == want.cost);
    for (const auto& order : want.orders) {
      const auto pos = oracle::PositionsOf(order);
      const int delta = pos[5] - pos[0];  // A is token 6, M token 1
      CHECK(delta == (base == AuxiliaryBase::kSov ? 1 : -1));
    }
  }
  const auto sov = CheckAuxiliaryPlacement(AuxiliaryBase::kSov);
  CHECK(RenderOrder(sov.witness.representative(), sov.labels) == "s S o O M A");
  CHECK(sov.witness.min_cost == 7);
  const auto vso = CheckAuxiliaryPlacement(AuxiliaryBase::kVso);
  CHECK(RenderOrder(vso.witness.representative(), vso.labels) == "A M S s O o");
  CHECK(vso.witness.min_cost == sov.witness.min_cost);
}

TEST_CASE("antilocality totals") {
  // Noun-final: a1 a2 S b1 b2 O V. Edges a1-S 2, a2-S 1, b1-O 2, b2-O 1,
  // S-V 4, O-V 1.
  oracle::Tree t;
  t.heads = {3, 3, 7, 6, 6, 7, 0};
  t.lengths.assign(7, 1);
  const auto id = [](const Rational& d) { return d; };
  const auto sq = [](const Rational& d) { return d * d; };
  const oracle::Order final_order = {1, 2, 3, 4, 5, 6, 7};
  const oracle::Order central_order = {1, 3, 2, 4, 6, 5, 7};
  CHECK(oracle::TotalCost(t, final_order, false, id) == 11);
  CHECK(oracle::TotalCost(t, central_order, false, id) == 11);
  CHECK(oracle::TotalCost(t, final_order, false, sq) == 27);
  CHECK(oracle::TotalCost(t, central_order, false, sq) == 33);

  const auto linear = AntilocalityDemo(2, false, CostFunction::Identity());
  CHECK(linear.asserted);
  CHECK_FALSE(linear.holds);
  const auto squared = AntilocalityDemo(2, false, CostFunction::Power(R(2)));
  CHECK(squared.holds);
  CHECK(AntilocalityDemo(2, true, CostFunction::Power(R(2))).holds);
  const auto vacuous = AntilocalityDemo(1);
  CHECK_FALSE(vacuous.asserted);
  CHECK(vacuous.detail.find("vacuous") != std::string::npos);
}

TEST_CASE("every witness re-verifies") {
  for (const auto& g : {CostFunction::Identity(), CostFunction::Power(R(2))}) {
    const auto reports = RunDefaultPredictions(g);
    CHECK(reports.size() == 17);
    for (const auto& report : reports) {
      for (const auto& lin : report.witness.optimal_orders) {
        CHECK(std::is_sorted(report.witness.optimal_orders.begin(),
                             report.witness.optimal_orders.end()));
        CHECK(lin.size() == report.labels.size());
      }
    }
  }
  const Scenario s = AuxiliaryScenario(AuxiliaryBase::kSov);
  const auto report = RunScenario(s, CostFunction::Identity());
  const auto again = ConstrainedMla(s.tree, s.constraint, Unit::kWords, CostFunction::Identity());
  CHECK(again.min_cost == report.witness.min_cost);
  CHECK(again.optimal_orders == report.witness.optimal_orders);
}

TEST_CASE("custom scenario with all orders equal") {
  Scenario s{"pair", BuildTree(std::vector<int>{1, 1}, {0, 1}), {}, {}, {"H", "d"}, true};
  Expectation e;
  e.kind = Expectation::Kind::kAllOrdersEqual;
  s.expectations.push_back(e);
  const auto report = RunScenario(s, CostFunction::Identity());
  CHECK(report.holds);
  CHECK(report.witness.optimal_orders.size() == 2);
}
