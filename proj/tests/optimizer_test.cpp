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


#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "deplen/error.hpp"
#include "deplen/optimizer.hpp"
#include "oracles.hpp"

using namespace deplen;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return MakeRational(p, q); }

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kInternal;
}

std::set<oracle::Order> OrdersOf(const MlaResult& r) {
  std::set<oracle::Order> out;
  for (const auto& lin : r.optimal_orders) out.insert(lin.order());
  return out;
}

oracle::Cost Wrap(const CostFunction& g) {
  return [g](const Rational& d) { return g(d); };
}

DepTree Unit1(std::vector<int> heads) {
  const std::vector<int> lengths(heads.size(), 1);
  return BuildTree(lengths, std::move(heads));
}

}  // namespace

TEST_CASE("brute force: small worked cases") {
  const auto id = CostFunction::Identity();
  const auto star = BruteForceMla(Unit1({0, 1, 1}), Unit::kWords, id);
  CHECK(star.min_cost == 2);
  CHECK(star.searched == 6);
  REQUIRE(star.optimal_orders.size() == 2);
  for (const auto& lin : star.optimal_orders) CHECK(lin.position(1) == 2);
  CHECK(star.representative().order() == std::vector<int>{2, 1, 3});

  const auto edge = BruteForceMla(Unit1({0, 1}), Unit::kWords, id);
  CHECK(edge.min_cost == 1);
  CHECK(edge.optimal_orders.size() == 2);

  const auto chain = BruteForceMla(Unit1({0, 1, 2}), Unit::kWords, id);
  CHECK(chain.min_cost == 2);
  for (const auto& lin : chain.optimal_orders) CHECK(lin.position(2) == 2);
}

TEST_CASE("brute force matches the permutation oracle") {
  std::mt19937_64 rng(43);
  const std::vector<CostFunction> gs = {CostFunction::Identity(), CostFunction::Power(R(2)),
                                        CostFunction::Logarithmic(),
                                        CostFunction::Power(R(1, 2))};
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto t = oracle::RandomTree(n, rng);
    const bool chars = rng() % 2 == 0;
    const CostFunction& g = gs[rng() % gs.size()];
    SearchOptions options;
    options.jobs = 1 + static_cast<int>(rng() % 3);
    const auto got = BruteForceMla(BuildTree(t.lengths, t.heads),
                                   chars ? Unit::kCharacters : Unit::kWords, g, nullptr, options);
    const auto want = oracle::Minimize(t, chars, Wrap(g));
    CHECK(got.min_cost == want.cost);
    CHECK(OrdersOf(got) == want.orders);
    CHECK(got.searched == want.feasible);
    CHECK(std::is_sorted(got.optimal_orders.begin(), got.optimal_orders.end()));
  }
}

TEST_CASE("constrained search matches the filtered oracle") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto t = oracle::RandomTree(n, rng);
    PrecedenceConstraint c;
    const auto shuffled = oracle::RandomOrder(n, rng);
    // Pairs consistent with `shuffled`, so the constraint is feasible.
    for (int k = 0; k < 2; ++k) {
      const int i = static_cast<int>(rng() % n);
      const int j = static_cast<int>(rng() % n);
      if (i < j) c.pairs.emplace_back(shuffled[i], shuffled[j]);
    }
    if (rng() % 2 == 0) {
      c.blocks.push_back({shuffled[0], shuffled[1]});
      c.blocks.push_back({shuffled[2]});
    }
    const auto keep = [&](const oracle::Order& order) {
      const auto pos = oracle::PositionsOf(order);
      for (const auto& [a, b] : c.pairs) {
        if (pos[a - 1] >= pos[b - 1]) return false;
      }
      int prev_max = 0;
      for (const auto& block : c.blocks) {
        int lo = n + 1, hi = 0;
        for (int tok : block) {
          lo = std::min(lo, pos[tok - 1]);
          hi = std::max(hi, pos[tok - 1]);
        }
        if (hi - lo + 1 != static_cast<int>(block.size())) return false;
        if (lo <= prev_max) return false;
        prev_max = hi;
      }
      return true;
    };
    const auto g = CostFunction::Power(R(2));
    const auto want = oracle::Minimize(t, false, Wrap(g), keep);
    const auto got = ConstrainedMla(BuildTree(t.lengths, t.heads), c, Unit::kWords, g);
    CHECK(got.min_cost == want.cost);
    CHECK(OrdersOf(got) == want.orders);
    CHECK(got.searched == want.feasible);
    for (const auto& lin : got.optimal_orders) CHECK(c.SatisfiedBy(lin));
  }
}

TEST_CASE("constraint edge cases") {
  const DepTree tree = Unit1({0, 1, 1, 1});
  const auto id = CostFunction::Identity();
  PrecedenceConstraint full;
  full.blocks = {{4}, {3}, {2}, {1}};
  const auto fixed = ConstrainedMla(tree, full, Unit::kWords, id);
  CHECK(fixed.optimal_orders.size() == 1);
  CHECK(fixed.searched == 1);
  CHECK(fixed.min_cost == 6);

  PrecedenceConstraint contradictory;
  contradictory.pairs = {{1, 2}, {2, 1}};
  CHECK(CodeOf([&] { ConstrainedMla(tree, contradictory, Unit::kWords, id); }) ==
        ErrorCode::kInfeasibleConstraints);
  PrecedenceConstraint unknown;
  unknown.pairs = {{1, 9}};
  CHECK(CodeOf([&] { ConstrainedMla(tree, unknown, Unit::kWords, id); }) ==
        ErrorCode::kInvalidArgument);
  PrecedenceConstraint twice;
  twice.blocks = {{1, 2}, {2, 3}};
  CHECK(CodeOf([&] { ConstrainedMla(tree, twice, Unit::kWords, id); }) ==
        ErrorCode::kInvalidArgument);
  PrecedenceConstraint clash;
  clash.blocks = {{1}, {2}};
  clash.pairs = {{2, 1}};
  CHECK(CodeOf([&] { ConstrainedMla(tree, clash, Unit::kWords, id); }) ==
        ErrorCode::kInfeasibleConstraints);
}

TEST_CASE("brute force guards") {
  std::vector<int> heads(11, 1);
  heads[0] = 0;
  const DepTree big = Unit1(heads);
  CHECK(CodeOf([&] { BruteForceMla(big, Unit::kWords, CostFunction::Identity()); }) ==
        ErrorCode::kTooLarge);
  SearchOptions small;
  small.max_n = 3;
  CHECK(CodeOf([&] {
          BruteForceMla(Unit1({0, 1, 1, 1}), Unit::kWords, CostFunction::Identity(), nullptr,
                        small);
        }) == ErrorCode::kTooLarge);
  const auto table = ParseCostTable("1,1\n2,2\n");
  CHECK(CodeOf([&] { BruteForceMla(Unit1({0, 1, 1, 1}), Unit::kWords, table); }) ==
        ErrorCode::kDomain);
}

TEST_CASE("projective enumeration yields exactly the projective orders") {
  CHECK(EnumerateProjective(Unit1({0, 1})).size() == 2);
  CHECK(EnumerateProjective(Unit1({0, 1, 1})).size() == 6);
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto t = oracle::RandomTree(n, rng);
    std::set<oracle::Order> want;
    oracle::Order order(n);
    std::iota(order.begin(), order.end(), 1);
    do {
      if (oracle::Projective(t, order)) want.insert(order);
    } while (std::next_permutation(order.begin(), order.end()));
    const auto got = EnumerateProjective(BuildTree(t.lengths, t.heads));
    std::set<oracle::Order> got_set;
    for (const auto& lin : got) got_set.insert(lin.order());
    CHECK(got.size() == got_set.size());
    CHECK(got_set == want);
  }
  std::vector<int> heads(13, 1);
  heads[0] = 0;
  CHECK(CodeOf([&] { EnumerateProjective(Unit1(heads)); }) == ErrorCode::kTooLarge);
}

TEST_CASE("projective solver: worked cases") {
  CHECK(ProjectiveMla(Unit1({0, 1, 1})).min_cost == 2);
  const DepTree chain = Unit1({0, 1, 2, 3, 4});
  CHECK(ProjectiveMla(chain).min_cost == 4);
  const DepTree binary = Unit1({0, 1, 1, 2, 2, 3, 3});
  Rational best = -1;
  for (const auto& lin : EnumerateProjective(binary)) {
    const Rational c = ArrangementCost(binary, lin, Unit::kWords, CostFunction::Identity());
    if (best < 0 || c < best) best = c;
  }
  CHECK(ProjectiveMla(binary).min_cost == best);
}

TEST_CASE("projective solver matches the filtered oracle, large trees stay projective") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto t = oracle::RandomTree(n, rng);
    const DepTree tree = BuildTree(t.lengths, t.heads);
    const auto keep = [&](const oracle::Order& o) { return oracle::Projective(t, o); };
    const auto want = oracle::Minimize(t, false, [](const Rational& d) { return d; }, keep);
    const auto got = ProjectiveMla(tree);
    CHECK(got.min_cost == want.cost);
    CHECK(want.orders.count(got.representative().order()) == 1);

    const auto sq = CostFunction::Power(R(2));
    const auto want_sq = oracle::Minimize(t, true, Wrap(sq), keep);
    const auto got_sq = ProjectiveMla(tree, Unit::kCharacters, sq);
    CHECK(got_sq.min_cost == want_sq.cost);
    CHECK(OrdersOf(got_sq) == want_sq.orders);
  }
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 20 + static_cast<int>(rng() % 60);
    const auto t = oracle::RandomTree(n, rng);
    const auto got = ProjectiveMla(BuildTree(t.lengths, t.heads));
    CHECK(oracle::Projective(t, got.representative().order()));
    CHECK(oracle::TotalCost(t, got.representative().order(), false,
                            [](const Rational& d) { return d; }) == got.min_cost);
  }
}

TEST_CASE("optimum never exceeds the projective optimum") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto t = oracle::RandomTree(n, rng);
    const DepTree tree = BuildTree(t.lengths, t.heads);
    CHECK(BruteForceMla(tree, Unit::kWords, CostFunction::Identity()).min_cost <=
          ProjectiveMla(tree).min_cost);
  }
}

TEST_CASE("parallel search is deterministic") {
  const DepTree tree = Unit1({0, 1, 1, 2, 2, 3, 3, 4});
  const auto g = CostFunction::Power(R(2));
  SearchOptions one, four;
  four.jobs = 4;
  const auto a = BruteForceMla(tree, Unit::kCharacters, g, nullptr, one);
  const auto b = BruteForceMla(tree, Unit::kCharacters, g, nullptr, four);
  CHECK(a.min_cost == b.min_cost);
  CHECK(a.optimal_orders == b.optimal_orders);
  CHECK(a.searched == b.searched);
}
