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
// Character-unit comparison of three French clause exemplars: SVO with a
// nominal object, SOV with a clitic pronoun object, and SOV with the
// nominal object (ungrammatical). The word lengths (5, 5, 2, 5) mimic
// "Marie mange la pomme"; the sentences are illustrative exemplars.

#ifndef DEPLEN_CASE_STUDY_HPP_
#define DEPLEN_CASE_STUDY_HPP_

#include <string>
#include <vector>

#include "deplen/metrics.hpp"
#include "deplen/rational.hpp"
#include "deplen/tree.hpp"

namespace deplen {

struct Fixture {
  char label = 'a';
  DepTree tree;
  Linearization order;
  std::string gloss;
};

struct FrenchFixtures {
  Fixture a;  // SVO, nominal object
  Fixture b;  // SOV, pronominal (clitic) object
  Fixture c;  // SOV, nominal object: a's tree reordered
};

FrenchFixtures FrenchFixture();

struct FixtureRow {
  char label = 'a';
  std::string gloss;
  std::string sentence;  // forms in linear order
  std::vector<EdgeLength> edges;
  Rational sum;
};

struct CaseStudyReport {
  Unit unit = Unit::kCharacters;
  std::vector<FixtureRow> rows;  // a, b, c
  // Labels by increasing sum (ties keep a, b, c order).
  std::string ranking;
  // Asserted: sum(b) < sum(c).
  bool b_below_c = false;
  // Reported only: sum(a) < sum(b) < sum(c) or sum(c) < sum(b) < sum(a).
  bool b_between_a_and_c = false;
};

CaseStudyReport CompareFixture(Unit unit = Unit::kCharacters);

}  // namespace deplen

#endif  // DEPLEN_CASE_STUDY_HPP_
