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


#include <cstring>
#include <string>
#include <vector>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "deplen/deplen.h"

namespace {

bool Is(dl_rational r, int64_t num, int64_t den) { return r.num == num && r.den == den; }

}  // namespace

TEST_CASE("tree handles") {
  const int heads[] = {2, 0, 4, 2};
  const char* forms[] = {"Marie", "mange", "la", "pomme"};
  dl_tree* tree = nullptr;
  REQUIRE(dl_tree_create(4, heads, nullptr, forms, &tree) == DL_OK);
  CHECK(dl_tree_size(tree) == 4);
  CHECK(dl_tree_root(tree) == 2);
  CHECK(dl_tree_head(tree, 3) == 4);
  CHECK(dl_tree_head(tree, 9) == -1);
  CHECK(dl_tree_char_length(tree, 3) == 2);

  dl_cost* id = nullptr;
  REQUIRE(dl_cost_create("identity", 0, &id) == DL_OK);
  dl_rational d{}, direct{};
  REQUIRE(dl_cost_d(tree, nullptr, id, DL_UNIT_CHARS, &d, &direct) == DL_OK);
  CHECK(Is(d, 39, 2));
  CHECK(Is(direct, 39, 2));
  const int positions_c[] = {1, 4, 2, 3};
  REQUIRE(dl_sum_lengths(tree, positions_c, DL_UNIT_CHARS, &d) == DL_OK);
  CHECK(Is(d, 51, 2));
  REQUIRE(dl_edge_length(tree, nullptr, 4, 3, DL_UNIT_CHARS, &d) == DL_OK);
  CHECK(Is(d, 9, 2));
  CHECK(dl_edge_length(tree, nullptr, 3, 4, DL_UNIT_CHARS, &d) == DL_ERR_UNKNOWN_EDGE);
  CHECK(std::strlen(dl_last_error()) > 0);
  int projective = -1;
  REQUIRE(dl_is_projective(tree, nullptr, &projective) == DL_OK);
  CHECK(projective == 1);
  dl_cost_destroy(id);
  dl_tree_destroy(tree);
  dl_tree_destroy(nullptr);
}

TEST_CASE("tree validation errors map to status codes") {
  dl_tree* tree = nullptr;
  const int lengths[] = {1, 1};
  const int cycle[] = {2, 1};
  CHECK(dl_tree_create(2, cycle, lengths, nullptr, &tree) == DL_ERR_CYCLE);
  CHECK(tree == nullptr);
  const int roots[] = {0, 0};
  CHECK(dl_tree_create(2, roots, lengths, nullptr, &tree) == DL_ERR_MULTI_ROOT);
  const int dangling[] = {0, 7};
  CHECK(dl_tree_create(2, dangling, lengths, nullptr, &tree) == DL_ERR_DISCONNECTED);
  CHECK(dl_tree_create(2, roots, nullptr, nullptr, &tree) == DL_ERR_INVALID_ARGUMENT);
  CHECK(std::string(dl_status_name(DL_ERR_CYCLE)) == "CycleError");
}

TEST_CASE("corpus parsing") {
  const std::string text =
      "1\tStop\tstop\tVERB\t_\t_\t0\troot\t_\t_\n"
      "2\tit\tit\tPRON\t_\t_\t1\tobj\t_\t_\n"
      "3\tnow\tnow\tADV\t_\t_\t1\tadvmod\t_\t_\n";
  dl_corpus* corpus = nullptr;
  REQUIRE(dl_corpus_parse(text.data(), text.size(), 0, &corpus) == DL_OK);
  REQUIRE(dl_corpus_size(corpus) == 1);
  const dl_tree* tree = dl_corpus_tree(corpus, 0);
  CHECK(dl_corpus_tree(corpus, 1) == nullptr);

  dl_cost* id = nullptr;
  REQUIRE(dl_cost_create("identity", 0, &id) == DL_OK);
  dl_mla_result* result = nullptr;
  REQUIRE(dl_mla_brute_force(tree, DL_UNIT_WORDS, id, nullptr, 0, nullptr, 2, &result) == DL_OK);
  dl_rational min{};
  REQUIRE(dl_mla_min_cost(result, &min) == DL_OK);
  CHECK(Is(min, 2, 1));
  CHECK(dl_mla_optimal_count(result) == 2);
  CHECK(dl_mla_searched(result) == 6);
  int order[3] = {};
  REQUIRE(dl_mla_optimal_order(result, 0, order, 3) == DL_OK);
  CHECK(order[0] == 2);
  CHECK(order[1] == 1);
  CHECK(dl_mla_optimal_order(result, 5, order, 3) == DL_ERR_RANGE);
  CHECK(dl_mla_optimal_order(result, 0, order, 2) == DL_ERR_SIZE_MISMATCH);
  dl_mla_destroy(result);

  const int pairs[] = {1, 2, 2, 1};
  CHECK(dl_mla_brute_force(tree, DL_UNIT_WORDS, id, pairs, 2, nullptr, 1, &result) ==
        DL_ERR_INFEASIBLE);
  const int block_of[] = {0, -1, 1};
  REQUIRE(dl_mla_brute_force(tree, DL_UNIT_WORDS, id, nullptr, 0, block_of, 1, &result) == DL_OK);
  REQUIRE(dl_mla_min_cost(result, &min) == DL_OK);
  CHECK(Is(min, 2, 1));
  CHECK(dl_mla_optimal_count(result) == 1);
  dl_mla_destroy(result);

  REQUIRE(dl_mla_projective(tree, DL_UNIT_WORDS, id, &result) == DL_OK);
  REQUIRE(dl_mla_min_cost(result, &min) == DL_OK);
  CHECK(Is(min, 2, 1));
  dl_mla_destroy(result);
  dl_cost_destroy(id);
  dl_corpus_destroy(corpus);

  CHECK(dl_corpus_parse("1\tx\n", 4, 0, &corpus) == DL_ERR_PARSE);
  CHECK(std::string(dl_last_error()).find("line 1") != std::string::npos);
  CHECK(dl_corpus_load("/nonexistent/file.conllu", 0, &corpus) == DL_ERR_IO);
}

TEST_CASE("cost handles") {
  dl_cost* g = nullptr;
  REQUIRE(dl_cost_create("power:2", 0, &g) == DL_OK);
  dl_rational out{};
  REQUIRE(dl_cost_eval(g, dl_rational{3, 2}, &out) == DL_OK);
  CHECK(Is(out, 9, 4));
  CHECK(dl_cost_eval(g, dl_rational{0, 1}, &out) == DL_ERR_DOMAIN);
  CHECK(dl_cost_eval(g, dl_rational{1, 0}, &out) == DL_ERR_INVALID_ARGUMENT);
  dl_cost_destroy(g);
  CHECK(dl_cost_create("nope", 0, &g) == DL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("pairing") {
  const dl_rational p[] = {{1, 2}, {3, 10}, {1, 5}};
  const dl_rational g[] = {{3, 1}, {1, 1}, {2, 1}};
  dl_rational assignment[3] = {};
  dl_rational total{};
  REQUIRE(dl_optimal_pairing(p, g, 3, assignment, &total) == DL_OK);
  CHECK(Is(total, 17, 10));
  CHECK(Is(assignment[0], 1, 1));
  CHECK(Is(assignment[2], 3, 1));
  int optimal = 0;
  REQUIRE(dl_verify_pairing(p, g, 3, &optimal) == DL_OK);
  CHECK(optimal == 1);
  CHECK(dl_optimal_pairing(p, g, 0, assignment, &total) == DL_ERR_SIZE_MISMATCH);
}

TEST_CASE("reports") {
  dl_run_config config;
  dl_run_config_init(&config);
  config.command = DL_CMD_CASESTUDY;
  dl_report* report = nullptr;
  REQUIRE(dl_run(&config, &report) == DL_OK);
  CHECK(std::string(dl_report_text(report)).find("25.5") != std::string::npos);
  CHECK(dl_report_exit_code(report) == 0);
  CHECK(std::string(dl_report_json(report)).empty());
  dl_report_destroy(report);

  config.command = DL_CMD_PAIR;
  config.pair_p = "0.5,0.3,0.2";
  config.pair_g = "1,2,3";
  config.pair_instances = 0;
  REQUIRE(dl_run(&config, &report) == DL_OK);
  CHECK(std::string(dl_report_text(report)).find("1.7") != std::string::npos);
  dl_report_destroy(report);

  config.command = DL_CMD_ANALYZE;
  config.input_path = "/nonexistent/file.conllu";
  CHECK(dl_run(&config, &report) == DL_ERR_IO);
  CHECK(report == nullptr);
}
