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


#include <string>

#include "doctest.h"
#include "json.hpp"
#include "deplen/error.hpp"
#include "deplen/report.hpp"

using namespace deplen;
using nlohmann::json;

namespace {

std::string Data(const std::string& name) { return std::string(DEPLEN_TEST_DATA_DIR) + "/" + name; }

RunConfig Config(Command command, Format format = Format::kJson) {
  RunConfig c;
  c.command = command;
  c.format = format;
  return c;
}

ErrorCode RunError(const RunConfig& c) {
  try {
    Run(c);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("analyze: per-sentence reports and merged histogram") {
  RunConfig c = Config(Command::kAnalyze);
  c.input_path = Data("sample5.conllu");
  const json j = json::parse(Run(c).text);
  REQUIRE(j["sentences"].size() == 5);
  CHECK(j["sentences"][0]["sum_lengths"] == "3/1");
  CHECK(j["sentences"][1]["D"] == "3/1");
  long total = 0;
  for (const auto& s : j["sentences"]) total += s["n"].get<long>() - 1;
  CHECK(j["histogram"]["total_edges"] == total);
  long summed = 0;
  for (const auto& [d, count] : j["histogram"]["counts"].items()) summed += count.get<long>();
  CHECK(summed == total);
}

TEST_CASE("analyze: csv histogram and character units") {
  RunConfig c = Config(Command::kAnalyze, Format::kCsv);
  c.input_path = Data("sample5.conllu");
  const std::string csv = Run(c).text;
  CHECK(csv.rfind("d,count,p\n", 0) == 0);
  c.format = Format::kJson;
  c.unit = Unit::kCharacters;
  const json j = json::parse(Run(c).text);
  CHECK(j["unit"] == "chars");
  // "The cat sleeps ." : The-cat 4, cat-sleeps 5.5, sleeps-. 4.5
  CHECK(j["sentences"][0]["sum_lengths"] == "14/1");
}

TEST_CASE("analyze: punctuation removal") {
  RunConfig c = Config(Command::kAnalyze);
  c.input_path = Data("sample5.conllu");
  c.drop_punctuation = true;
  const json j = json::parse(Run(c).text);
  CHECK(j["sentences"][0]["n"] == 3);
  CHECK(j["sentences"][4]["n"] == 14);
}

TEST_CASE("analyze: input errors") {
  RunConfig c = Config(Command::kAnalyze);
  c.input_path = Data("empty.conllu");
  CHECK(RunError(c) == ErrorCode::kEmptyCorpus);
  c.input_path = Data("malformed.conllu");
  try {
    Run(c);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  c.input_path = Data("missing.conllu");
  CHECK(RunError(c) == ErrorCode::kIo);
  c.input_path = Data("sample5.conllu");
  c.g_spec = "power:-1";
  CHECK(RunError(c) == ErrorCode::kInvalidArgument);
}

TEST_CASE("optimize: gaps") {
  RunConfig c = Config(Command::kOptimize);
  c.input_path = Data("sample5.conllu");
  const json j = json::parse(Run(c).text);
  CHECK(j["sentences"][0]["gap"] == "1/1");
  CHECK(j["sentences"][1]["gap"] == "3/2");
  CHECK(j["sentences"][1]["min_cost"] == "2/1");
  CHECK(j["sentences"][4]["method"] == "projective");
  for (const auto& s : j["sentences"]) {
    if (s["method"] == "exhaustive") CHECK(s["gap_decimal"].get<double>() >= 1.0);
  }
}

TEST_CASE("optimize: exact mode guard and projective cut-off") {
  RunConfig c = Config(Command::kOptimize);
  c.input_path = Data("chain11.conllu");
  c.exact = true;
  CHECK(RunError(c) == ErrorCode::kTooLarge);
  c.exact = false;
  const json j = json::parse(Run(c).text);
  CHECK(j["sentences"][0]["method"] == "projective");
  CHECK(j["sentences"][0]["gap"] == "1/1");
  c.input_path = Data("sample5.conllu");
  c.g_spec = "power:2";
  c.unit = Unit::kCharacters;
  const json k = json::parse(Run(c).text);
  CHECK(k["sentences"][4]["method"] == "skipped");
}

TEST_CASE("pair: demo instance") {
  RunConfig c = Config(Command::kPair);
  c.pair_instances = 5;
  const RunOutput out = Run(c);
  const json j = json::parse(out.text);
  CHECK(j["instances"][0]["total"] == "17/10");
  CHECK(j["instances"].size() == 6);
  CHECK(out.exit_code == 0);
  c.pair_p = {"1/2", "1/2"};
  c.pair_g = {"1"};
  CHECK(RunError(c) == ErrorCode::kSizeMismatch);
}

TEST_CASE("casestudy: sums") {
  const RunOutput out = Run(Config(Command::kCaseStudy));
  const json j = json::parse(out.text);
  CHECK(j["fixtures"][0]["sum"] == "39/2");
  CHECK(j["fixtures"][1]["sum"] == "27/2");
  CHECK(j["fixtures"][2]["sum"] == "51/2");
  CHECK(j["b_below_c"] == true);
  CHECK(out.exit_code == 0);
}

TEST_CASE("predict: exit code follows the asserted checks") {
  RunConfig c = Config(Command::kPredict, Format::kTable);
  const RunOutput out = Run(c);
  const json j = json::parse(out.json_report);
  bool all = true;
  for (const auto& s : j["scenarios"]) {
    if (s["asserted"].get<bool>() && !s["holds"].get<bool>()) all = false;
  }
  CHECK(out.exit_code == (all ? 0 : 1));
  CHECK(j["scenarios"].size() == 17);
  c.unit = Unit::kCharacters;
  CHECK(RunError(c) == ErrorCode::kInvalidArgument);
}

TEST_CASE("output does not depend on the number of workers") {
  for (Command command : {Command::kAnalyze, Command::kOptimize}) {
    for (Format format : {Format::kTable, Format::kJson, Format::kCsv}) {
      RunConfig c = Config(command, format);
      c.input_path = Data("sample5.conllu");
      const std::string one = Run(c).text;
      c.jobs = 4;
      CHECK(Run(c).text == one);
    }
  }
}
