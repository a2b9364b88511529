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


// deplen: dependency length reports over CoNLL-U corpora.
//
//   deplen analyze corpus.conllu --unit chars --g power:2 --format csv
//   deplen optimize corpus.conllu --jobs 4
//   deplen predict --report predictions.json
//   deplen pair --p 0.5,0.3,0.2 --g-values 1,2,3
//   deplen casestudy
//
// Exit status: 0 success, 1 a checked prediction failed, 2 bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "deplen/deplen.h"

namespace {

constexpr int kInputError = 2;

struct Options {
  std::string input;
  std::string unit;
  std::string g = "identity";
  bool allow_nonmonotone = false;
  int max_n = 10;
  bool exact = false;
  std::string format = "table";
  int jobs = 1;
  std::uint64_t seed = 1;
  bool drop_punct = false;
  int instances = 100;
  std::string p_values;
  std::string g_values;
  std::string report_path;
};

void AddCommon(CLI::App* sub, Options& o) {
  sub->add_option("--unit", o.unit, "Length unit")
      ->check(CLI::IsMember({"words", "chars"}));
  sub->add_option("--g", o.g, "Cost function: identity, power:A, log or table:PATH");
  sub->add_flag("--allow-nonmonotone-g", o.allow_nonmonotone,
                "Accept a cost table that is not strictly increasing");
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--seed", o.seed, "Random seed");
}

int Fail(const std::string& message) {
  std::cerr << "deplen: error: " << message << "\n";
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dependency length metrics and minimum linear arrangements"};
  app.require_subcommand(1);
  app.set_version_flag("--version", dl_version());
  Options o;

  auto* analyze = app.add_subcommand("analyze", "Sum of lengths, D and histogram per sentence");
  analyze->add_option("input", o.input, "CoNLL-U file")->required();
  analyze->add_flag("--drop-punct", o.drop_punct, "Drop punctuation leaves");
  AddCommon(analyze, o);

  auto* optimize = app.add_subcommand("optimize", "Observed cost against the minimum arrangement");
  optimize->add_option("input", o.input, "CoNLL-U file")->required();
  optimize->add_flag("--drop-punct", o.drop_punct, "Drop punctuation leaves");
  optimize->add_option("--max-n", o.max_n, "Exhaustive search up to this length")
      ->check(CLI::Range(1, 10));
  optimize->add_flag("--exact", o.exact, "Exhaustive search for every sentence");
  AddCommon(optimize, o);

  auto* predict = app.add_subcommand("predict", "Word-order predictions by exhaustive search");
  predict->add_option("--report", o.report_path, "Write the JSON report here");
  AddCommon(predict, o);

  auto* pair = app.add_subcommand("pair", "Rearrangement pairing of proportions and costs");
  pair->add_option("--p", o.p_values, "Comma-separated proportions");
  pair->add_option("--g-values", o.g_values, "Comma-separated cost values");
  pair->add_option("--instances", o.instances, "Random instances to verify")
      ->check(CLI::NonNegativeNumber);
  AddCommon(pair, o);

  auto* casestudy = app.add_subcommand("casestudy", "French clitic fixture in character units");
  AddCommon(casestudy, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  static const std::map<std::string, dl_format> kFormats = {
      {"table", DL_FORMAT_TABLE}, {"json", DL_FORMAT_JSON}, {"csv", DL_FORMAT_CSV}};

  dl_run_config config;
  dl_run_config_init(&config);
  if (analyze->parsed()) config.command = DL_CMD_ANALYZE;
  if (optimize->parsed()) config.command = DL_CMD_OPTIMIZE;
  if (predict->parsed()) config.command = DL_CMD_PREDICT;
  if (pair->parsed()) config.command = DL_CMD_PAIR;
  if (casestudy->parsed()) config.command = DL_CMD_CASESTUDY;
  if (!o.input.empty()) config.input_path = o.input.c_str();
  if (!o.unit.empty()) config.unit = o.unit == "chars" ? DL_UNIT_CHARS : DL_UNIT_WORDS;
  config.g_spec = o.g.c_str();
  config.allow_nonmonotone = o.allow_nonmonotone;
  config.max_n = o.max_n;
  config.exact = o.exact;
  config.format = kFormats.at(o.format);
  config.jobs = o.jobs;
  config.seed = o.seed;
  config.drop_punctuation = o.drop_punct;
  config.pair_instances = o.instances;
  if (!o.p_values.empty()) config.pair_p = o.p_values.c_str();
  if (!o.g_values.empty()) config.pair_g = o.g_values.c_str();

  dl_report* report = nullptr;
  const dl_status status = dl_run(&config, &report);
  if (status != DL_OK) {
    return Fail(std::string(dl_status_name(status)) + ": " + dl_last_error());
  }
  std::cout << dl_report_text(report);
  std::cout.flush();
  const int exit_code = dl_report_exit_code(report);
  if (!o.report_path.empty()) {
    std::ofstream out(o.report_path, std::ios::binary);
    out << dl_report_json(report);
    if (!out) {
      dl_report_destroy(report);
      return Fail("cannot write '" + o.report_path + "'");
    }
  }
  dl_report_destroy(report);
  return exit_code;
}
