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

// Report generation for the command-line subcommands. Output is a pure
// function of the configuration and the input file: rationals are rendered
// canonically and representative optima are lexicographically smallest.

#ifndef DEPLEN_REPORT_HPP_
#define DEPLEN_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deplen/optimizer.hpp"
#include "deplen/rational.hpp"
#include "deplen/tree.hpp"

namespace deplen {

enum class Command { kAnalyze, kOptimize, kPredict, kPair, kCaseStudy };
enum class Format { kTable, kJson, kCsv };

Command ParseCommand(const std::string& name);
Format ParseFormat(const std::string& name);
const char* CommandName(Command command);

struct RunConfig {
  Command command = Command::kAnalyze;
  // CoNLL-U input for analyze and optimize.
  std::string input_path;
  // Defaults to Characters for casestudy and Words elsewhere.
  std::optional<Unit> unit;
  std::string g_spec = "identity";
  bool allow_nonmonotone = false;
  // Sentences with n <= max_n are solved exhaustively (max_n <= 10).
  int max_n = kMaxBruteForceN;
  // Exhaustive search for every sentence; larger ones fail with kTooLarge.
  bool exact = false;
  Format format = Format::kTable;
  int jobs = 1;
  std::uint64_t seed = 1;
  bool drop_punctuation = false;
  // pair: random verification instances, plus an optional explicit instance.
  int pair_instances = 100;
  std::vector<std::string> pair_p;
  std::vector<std::string> pair_g;
};

struct RunOutput {
  std::string text;
  // predict: the JSON report of every scenario, regardless of format.
  std::string json_report;
  // 0 success / all checks hold, 1 a check failed.
  int exit_code = 0;
};

// Input problems are raised as Error; the caller maps them to exit status 2.
RunOutput Run(const RunConfig& config);

}  // namespace deplen

#endif  // DEPLEN_REPORT_HPP_
