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

#include "deplen/deplen.h"

#include <exception>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "deplen/conllu.hpp"
#include "deplen/cost_models.hpp"
#include "deplen/error.hpp"
#include "deplen/metrics.hpp"
#include "deplen/optimizer.hpp"
#include "deplen/report.hpp"
#include "deplen/tree.hpp"

using deplen::Error;
using deplen::ErrorCode;

struct dl_tree {
  deplen::DepTree tree;
};

struct dl_corpus {
  std::vector<dl_tree> trees;
};

struct dl_cost {
  deplen::CostFunction g;
};

struct dl_mla_result {
  deplen::MlaResult result;
};

struct dl_report {
  deplen::RunOutput output;
};

static_assert(static_cast<int>(ErrorCode::kInvalidArgument) == DL_ERR_INVALID_ARGUMENT);
static_assert(static_cast<int>(ErrorCode::kParse) == DL_ERR_PARSE);
static_assert(static_cast<int>(ErrorCode::kDisconnected) == DL_ERR_DISCONNECTED);
static_assert(static_cast<int>(ErrorCode::kTooLarge) == DL_ERR_TOO_LARGE);
static_assert(static_cast<int>(ErrorCode::kEmptyCorpus) == DL_ERR_EMPTY_CORPUS);
static_assert(static_cast<int>(ErrorCode::kInternal) == DL_ERR_INTERNAL);

namespace {

thread_local std::string last_error;

template <typename Fn>
dl_status Guard(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return DL_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<dl_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DL_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return DL_ERR_INTERNAL;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

deplen::Unit ToUnit(dl_unit unit) {
  if (unit == DL_UNIT_WORDS) return deplen::Unit::kWords;
  if (unit == DL_UNIT_CHARS) return deplen::Unit::kCharacters;
  throw Error(ErrorCode::kInvalidArgument, "unknown unit");
}

deplen::Linearization ToLinearization(const dl_tree* tree, const int* positions) {
  const std::size_t n = tree->tree.size();
  if (positions == nullptr) return deplen::Linearization::Identity(n);
  return deplen::Linearization::FromPositions(std::span<const int>(positions, n));
}

dl_rational ToC(const deplen::Rational& r) {
  dl_rational out{};
  deplen::ToInt64Pair(r, &out.num, &out.den);
  return out;
}

deplen::Rational FromC(const dl_rational& r) {
  if (r.den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  return deplen::MakeRational(r.num, r.den);
}

std::vector<std::string> SplitCommas(const char* text) {
  std::vector<std::string> out;
  if (text == nullptr || *text == '\0') return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

extern "C" {

const char* dl_version(void) { return "0.1.0"; }

const char* dl_status_name(dl_status status) {
  if (status == DL_OK) return "OK";
  if (status < DL_ERR_INVALID_ARGUMENT || status > DL_ERR_INTERNAL) return "Unknown";
  return deplen::ErrorCodeName(static_cast<ErrorCode>(status));
}

const char* dl_last_error(void) { return last_error.c_str(); }

dl_status dl_tree_create(size_t n, const int* heads, const int* char_lengths,
                         const char* const* forms, dl_tree** out) {
  return Guard([&] {
    Require(out != nullptr && heads != nullptr, "null argument");
    Require(char_lengths != nullptr || forms != nullptr,
            "either forms or char_lengths is required");
    *out = nullptr;
    std::vector<deplen::Token> tokens;
    for (size_t i = 0; i < n; ++i) {
      const int index = static_cast<int>(i) + 1;
      deplen::Token t = forms != nullptr
                            ? deplen::MakeToken(index, forms[i] ? forms[i] : "")
                            : deplen::MakeSyntheticToken(index, char_lengths[i]);
      if (forms != nullptr && char_lengths != nullptr) t.char_length = char_lengths[i];
      tokens.push_back(std::move(t));
    }
    auto tree = deplen::BuildTree(std::move(tokens), std::vector<int>(heads, heads + n));
    *out = new dl_tree{std::move(tree)};
  });
}

void dl_tree_destroy(dl_tree* tree) { delete tree; }

size_t dl_tree_size(const dl_tree* tree) { return tree ? tree->tree.size() : 0; }

int dl_tree_root(const dl_tree* tree) { return tree ? tree->tree.root() : 0; }

int dl_tree_head(const dl_tree* tree, int token) {
  if (!tree || token < 1 || token > static_cast<int>(tree->tree.size())) return -1;
  return tree->tree.head(token);
}

int dl_tree_char_length(const dl_tree* tree, int token) {
  if (!tree || token < 1 || token > static_cast<int>(tree->tree.size())) return -1;
  return tree->tree.token(token).char_length;
}

dl_status dl_corpus_parse(const char* text, size_t length, int drop_punctuation,
                          dl_corpus** out) {
  return Guard([&] {
    Require(out != nullptr && (text != nullptr || length == 0), "null argument");
    *out = nullptr;
    deplen::ConlluOptions options;
    options.drop_punctuation = drop_punctuation != 0;
    auto trees = deplen::ParseConllu(std::string_view(text ? text : "", length), options);
    auto corpus = std::make_unique<dl_corpus>();
    corpus->trees.reserve(trees.size());
    for (auto& t : trees) corpus->trees.push_back(dl_tree{std::move(t)});
    *out = corpus.release();
  });
}

dl_status dl_corpus_load(const char* path, int drop_punctuation, dl_corpus** out) {
  std::string text;
  const dl_status read = Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIo, std::string("cannot open '") + path + "'");
    std::ostringstream content;
    content << in.rdbuf();
    text = content.str();
  });
  if (read != DL_OK) return read;
  const dl_status parsed = dl_corpus_parse(text.data(), text.size(), drop_punctuation, out);
  if (parsed != DL_OK) last_error = std::string(path) + ": " + last_error;
  return parsed;
}

size_t dl_corpus_size(const dl_corpus* corpus) { return corpus ? corpus->trees.size() : 0; }

const dl_tree* dl_corpus_tree(const dl_corpus* corpus, size_t index) {
  if (!corpus || index >= corpus->trees.size()) return nullptr;
  return &corpus->trees[index];
}

void dl_corpus_destroy(dl_corpus* corpus) { delete corpus; }

dl_status dl_cost_create(const char* spec, int allow_nonmonotone, dl_cost** out) {
  return Guard([&] {
    Require(spec != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = new dl_cost{deplen::MakeCostFunction(spec, allow_nonmonotone != 0)};
  });
}

dl_status dl_cost_eval(const dl_cost* cost, dl_rational d, dl_rational* out) {
  return Guard([&] {
    Require(cost != nullptr && out != nullptr, "null argument");
    *out = ToC(cost->g(FromC(d)));
  });
}

void dl_cost_destroy(dl_cost* cost) { delete cost; }

dl_status dl_is_projective(const dl_tree* tree, const int* positions, int* out) {
  return Guard([&] {
    Require(tree != nullptr && out != nullptr, "null argument");
    *out = deplen::IsProjective(tree->tree, ToLinearization(tree, positions)) ? 1 : 0;
  });
}

dl_status dl_edge_length(const dl_tree* tree, const int* positions, int head, int dependent,
                         dl_unit unit, dl_rational* out) {
  return Guard([&] {
    Require(tree != nullptr && out != nullptr, "null argument");
    const auto e = deplen::MeasureEdge(tree->tree, ToLinearization(tree, positions),
                                       deplen::Edge{head, dependent}, ToUnit(unit));
    *out = ToC(e.value());
  });
}

dl_status dl_sum_lengths(const dl_tree* tree, const int* positions, dl_unit unit,
                         dl_rational* out) {
  return Guard([&] {
    Require(tree != nullptr && out != nullptr, "null argument");
    *out = ToC(deplen::SumLengths(tree->tree, ToLinearization(tree, positions), ToUnit(unit)));
  });
}

dl_status dl_cost_d(const dl_tree* tree, const int* positions, const dl_cost* cost,
                    dl_unit unit, dl_rational* d_out, dl_rational* direct_out) {
  return Guard([&] {
    Require(tree != nullptr && cost != nullptr && d_out != nullptr, "null argument");
    const auto report = deplen::ComputeCost(tree->tree, ToLinearization(tree, positions),
                                            cost->g, ToUnit(unit));
    const dl_rational d = ToC(report.D);
    const dl_rational direct = ToC(report.direct_sum);
    *d_out = d;
    if (direct_out != nullptr) *direct_out = direct;
  });
}

dl_status dl_mla_brute_force(const dl_tree* tree, dl_unit unit, const dl_cost* cost,
                             const int* precede_pairs, size_t pair_count,
                             const int* block_of, int jobs, dl_mla_result** out) {
  return Guard([&] {
    Require(tree != nullptr && cost != nullptr && out != nullptr, "null argument");
    Require(precede_pairs != nullptr || pair_count == 0, "null precedence pairs");
    *out = nullptr;
    deplen::PrecedenceConstraint constraint;
    for (size_t i = 0; i < pair_count; ++i) {
      constraint.pairs.emplace_back(precede_pairs[2 * i], precede_pairs[2 * i + 1]);
    }
    if (block_of != nullptr) {
      int blocks = 0;
      for (size_t t = 0; t < tree->tree.size(); ++t) blocks = std::max(blocks, block_of[t] + 1);
      constraint.blocks.assign(blocks, {});
      for (size_t t = 0; t < tree->tree.size(); ++t) {
        if (block_of[t] >= 0) constraint.blocks[block_of[t]].push_back(static_cast<int>(t) + 1);
      }
      std::erase_if(constraint.blocks, [](const auto& b) { return b.empty(); });
    }
    deplen::SearchOptions options;
    options.jobs = jobs < 1 ? 1 : jobs;
    auto result = deplen::BruteForceMla(tree->tree, ToUnit(unit), cost->g,
                                        constraint.empty() ? nullptr : &constraint, options);
    *out = new dl_mla_result{std::move(result)};
  });
}

dl_status dl_mla_projective(const dl_tree* tree, dl_unit unit, const dl_cost* cost,
                            dl_mla_result** out) {
  return Guard([&] {
    Require(tree != nullptr && cost != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = new dl_mla_result{deplen::ProjectiveMla(tree->tree, ToUnit(unit), cost->g)};
  });
}

dl_status dl_mla_min_cost(const dl_mla_result* result, dl_rational* out) {
  return Guard([&] {
    Require(result != nullptr && out != nullptr, "null argument");
    *out = ToC(result->result.min_cost);
  });
}

size_t dl_mla_optimal_count(const dl_mla_result* result) {
  return result ? result->result.optimal_orders.size() : 0;
}

uint64_t dl_mla_searched(const dl_mla_result* result) {
  return result ? result->result.searched : 0;
}

dl_status dl_mla_optimal_order(const dl_mla_result* result, size_t index, int* order_out,
                               size_t capacity) {
  return Guard([&] {
    Require(result != nullptr && order_out != nullptr, "null argument");
    const auto& orders = result->result.optimal_orders;
    if (index >= orders.size()) throw Error(ErrorCode::kRange, "optimum index out of range");
    const auto& order = orders[index].order();
    if (capacity < order.size()) {
      throw Error(ErrorCode::kSizeMismatch, "output buffer too small");
    }
    std::copy(order.begin(), order.end(), order_out);
  });
}

void dl_mla_destroy(dl_mla_result* result) { delete result; }

dl_status dl_optimal_pairing(const dl_rational* p, const dl_rational* g, size_t m,
                             dl_rational* assignment_out, dl_rational* total_out) {
  return Guard([&] {
    Require((p != nullptr && g != nullptr) || m == 0, "null argument");
    std::vector<deplen::Rational> ps;
    std::vector<deplen::Rational> gs;
    for (size_t i = 0; i < m; ++i) {
      ps.push_back(FromC(p[i]));
      gs.push_back(FromC(g[i]));
    }
    const auto result = deplen::OptimalPairing(ps, gs);
    std::vector<dl_rational> assignment;
    for (const auto& v : result.assignment) assignment.push_back(ToC(v));
    const dl_rational total = ToC(result.total);
    if (assignment_out != nullptr) std::copy(assignment.begin(), assignment.end(), assignment_out);
    if (total_out != nullptr) *total_out = total;
  });
}

dl_status dl_verify_pairing(const dl_rational* p, const dl_rational* g, size_t m,
                            int* optimal_out) {
  return Guard([&] {
    Require(optimal_out != nullptr && ((p != nullptr && g != nullptr) || m == 0),
            "null argument");
    std::vector<deplen::Rational> ps;
    std::vector<deplen::Rational> gs;
    for (size_t i = 0; i < m; ++i) {
      ps.push_back(FromC(p[i]));
      gs.push_back(FromC(g[i]));
    }
    *optimal_out = deplen::VerifyPairingOptimal(ps, gs) ? 1 : 0;
  });
}

void dl_run_config_init(dl_run_config* config) {
  if (config == nullptr) return;
  *config = dl_run_config{};
  config->command = DL_CMD_ANALYZE;
  config->input_path = nullptr;
  config->unit = -1;
  config->g_spec = "identity";
  config->max_n = deplen::kMaxBruteForceN;
  config->format = DL_FORMAT_TABLE;
  config->jobs = 1;
  config->seed = 1;
  config->pair_instances = 100;
}

dl_status dl_run(const dl_run_config* config, dl_report** out) {
  return Guard([&] {
    Require(config != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    deplen::RunConfig rc;
    switch (config->command) {
      case DL_CMD_ANALYZE: rc.command = deplen::Command::kAnalyze; break;
      case DL_CMD_OPTIMIZE: rc.command = deplen::Command::kOptimize; break;
      case DL_CMD_PREDICT: rc.command = deplen::Command::kPredict; break;
      case DL_CMD_PAIR: rc.command = deplen::Command::kPair; break;
      case DL_CMD_CASESTUDY: rc.command = deplen::Command::kCaseStudy; break;
      default: throw Error(ErrorCode::kInvalidArgument, "unknown command");
    }
    switch (config->format) {
      case DL_FORMAT_TABLE: rc.format = deplen::Format::kTable; break;
      case DL_FORMAT_JSON: rc.format = deplen::Format::kJson; break;
      case DL_FORMAT_CSV: rc.format = deplen::Format::kCsv; break;
      default: throw Error(ErrorCode::kInvalidArgument, "unknown format");
    }
    if (config->input_path) rc.input_path = config->input_path;
    if (config->unit >= 0) rc.unit = ToUnit(static_cast<dl_unit>(config->unit));
    if (config->g_spec) rc.g_spec = config->g_spec;
    rc.allow_nonmonotone = config->allow_nonmonotone != 0;
    rc.max_n = config->max_n;
    rc.exact = config->exact != 0;
    rc.jobs = config->jobs;
    rc.seed = config->seed;
    rc.drop_punctuation = config->drop_punctuation != 0;
    rc.pair_instances = config->pair_instances;
    rc.pair_p = SplitCommas(config->pair_p);
    rc.pair_g = SplitCommas(config->pair_g);
    *out = new dl_report{deplen::Run(rc)};
  });
}

const char* dl_report_text(const dl_report* report) {
  return report ? report->output.text.c_str() : "";
}

const char* dl_report_json(const dl_report* report) {
  return report ? report->output.json_report.c_str() : "";
}

int dl_report_exit_code(const dl_report* report) {
  return report ? report->output.exit_code : 1;
}

void dl_report_destroy(dl_report* report) { delete report; }

}  // extern "C"
