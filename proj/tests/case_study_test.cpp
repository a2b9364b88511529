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
#include "deplen/case_study.hpp"
#include "oracles.hpp"

using namespace deplen;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return MakeRational(p, q); }

std::vector<Rational> SortedEdges(const FixtureRow& row) {
  std::vector<Rational> out;
  for (const auto& e : row.edges) out.push_back(e.value());
  std::sort(out.begin(), out.end());
  return out;
}

oracle::Tree ToOracle(const DepTree& tree) {
  oracle::Tree t;
  for (int i = 1; i <= static_cast<int>(tree.size()); ++i) {
    t.heads.push_back(tree.head(i));
    t.lengths.push_back(tree.token(i).char_length);
  }
  return t;
}

}  // namespace

TEST_CASE("fixtures") {
  const FrenchFixtures f = FrenchFixture();
  CHECK(f.a.tree.edges().size() == 3);
  CHECK(f.b.tree.edges().size() == 2);
  CHECK(f.c.tree.size() == f.a.tree.size());
  for (int i = 1; i <= 4; ++i) CHECK(f.c.tree.head(i) == f.a.tree.head(i));
  CHECK_FALSE(f.c.order == f.a.order);
  CHECK(f.a.tree.token(3).char_length == 2);
}

TEST_CASE("character sums in half units") {
  const auto report = CompareFixture();
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].sum == R(39, 2));
  CHECK(report.rows[1].sum == R(27, 2));
  CHECK(report.rows[2].sum == R(51, 2));
  CHECK(SortedEdges(report.rows[0]) == std::vector<Rational>{R(9, 2), R(6), R(9)});
  CHECK(SortedEdges(report.rows[1]) == std::vector<Rational>{R(9, 2), R(9)});
  CHECK(SortedEdges(report.rows[2]) == std::vector<Rational>{R(9, 2), R(6), R(15)});
  CHECK(report.b_below_c);
  CHECK_FALSE(report.b_between_a_and_c);
  CHECK(report.ranking == "bac");
}

TEST_CASE("fixture sums agree with the written-out sentence") {
  const FrenchFixtures f = FrenchFixture();
  const auto report = CompareFixture();
  const Fixture* fixtures[] = {&f.a, &f.b, &f.c};
  for (int i = 0; i < 3; ++i) {
    const auto t = ToOracle(fixtures[i]->tree);
    Rational sum = 0;
    for (const auto& d : oracle::CharLengths(t, fixtures[i]->order.order())) sum += d;
    CHECK(report.rows[i].sum == sum);
  }
}

TEST_CASE("word units") {
  const auto report = CompareFixture(Unit::kWords);
  CHECK(report.rows[0].sum == 4);
  CHECK(report.rows[1].sum == 3);
  CHECK(report.rows[2].sum == 5);
  CHECK(report.b_below_c);
}
