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
#include "deplen/case_study.hpp"

#include <algorithm>

namespace deplen {
namespace {

DepTree FormsTree(const std::vector<std::string>& forms, std::vector<int> heads) {
  std::vector<Token> tokens;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    tokens.push_back(MakeToken(static_cast<int>(i) + 1, forms[i]));
  }
  return BuildTree(std::move(tokens), std::move(heads));
}

FixtureRow Measure(const Fixture& f, Unit unit) {
  FixtureRow row;
  row.label = f.label;
  row.gloss = f.gloss;
  for (int t : f.order.order()) {
    if (!row.sentence.empty()) row.sentence += ' ';
    row.sentence += f.tree.token(t).form;
  }
  row.edges = MeasureEdges(f.tree, f.order, unit);
  row.sum = SumLengths(f.tree, f.order, unit);
  return row;
}

}  // namespace

FrenchFixtures FrenchFixture() {
  // Marie <- mange (root) -> pomme -> la
  const DepTree svo = FormsTree({"Marie", "mange", "la", "pomme"},
                                {2, kRootHead, 4, 2});
  // Marie and the clitic la both attach to mange.
  const DepTree clitic = FormsTree({"Marie", "la", "mange"}, {3, 3, kRootHead});
  return FrenchFixtures{
      Fixture{'a', svo, Linearization::Identity(4),
              "SVO, nominal object (Marie mange la pomme)"},
      Fixture{'b', clitic, Linearization::Identity(3),
              "SOV, pronominal object (Marie la mange)"},
      Fixture{'c', svo, Linearization::FromOrder({1, 3, 4, 2}),
              "SOV, nominal object, ungrammatical (*Marie la pomme mange)"},
  };
}

CaseStudyReport CompareFixture(Unit unit) {
  const FrenchFixtures fx = FrenchFixture();
  CaseStudyReport report;
  report.unit = unit;
  report.rows = {Measure(fx.a, unit), Measure(fx.b, unit), Measure(fx.c, unit)};
  std::vector<const FixtureRow*> sorted;
  for (const FixtureRow& r : report.rows) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const FixtureRow* x, const FixtureRow* y) { return x->sum < y->sum; });
  for (const FixtureRow* r : sorted) report.ranking += r->label;
  const Rational& a = report.rows[0].sum;
  const Rational& b = report.rows[1].sum;
  const Rational& c = report.rows[2].sum;
  report.b_below_c = b < c;
  report.b_between_a_and_c = (a < b && b < c) || (c < b && b < a);
  return report;
}

}  // namespace deplen
