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

#include "deplen/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "deplen/case_study.hpp"
#include "deplen/conllu.hpp"
#include "deplen/cost_models.hpp"
#include "deplen/error.hpp"
#include "deplen/metrics.hpp"
#include "deplen/predictions.hpp"

namespace deplen {
namespace {

using Json = nlohmann::ordered_json;

// Runs fn(i) for i in [0, count) on up to `jobs` threads; results stay in
// index order. The first failure by index is rethrown.
template <typename T>
std::vector<T> ParallelMap(std::size_t count, int jobs,
                           const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> failures(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const int threads =
      static_cast<int>(std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)),
                                               1, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

Json RationalJson(const Rational& r) { return ToFractionString(r); }

void PutRational(Json& obj, const std::string& key, const Rational& r) {
  obj[key] = ToFractionString(r);
  obj[key + "_decimal"] = ToDouble(r);
}

std::string ReadFile(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::kInvalidArgument, "no input file given");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

ConlluDocument LoadCorpus(const RunConfig& config) {
  const std::string text = ReadFile(config.input_path);
  ConlluDocument doc;
  try {
    doc = ReadConllu(text, ConlluOptions{config.drop_punctuation});
  } catch (const Error& e) {
    throw Error(e.code(), config.input_path + ": " + e.what());
  }
  if (doc.trees.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, config.input_path + ": no sentences");
  }
  return doc;
}

// Simple aligned text table.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void Add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string Render() const {
    std::vector<std::size_t> widths;
    for (const auto& row : rows_) {
      widths.resize(std::max(widths.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i) {
        widths[i] = std::max(widths[i], row[i].size());
      }
    }
    std::string out;
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size() + 2, ' ');
      }
      out += line + "\n";
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string JoinInts(const std::vector<int>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string Forms(const DepTree& tree, const Linearization& lin) {
  std::string out;
  for (int t : lin.order()) {
    if (!out.empty()) out += ' ';
    out += tree.token(t).form.empty() ? std::to_string(t) : tree.token(t).form;
  }
  return out;
}

std::string Header(const RunConfig& config, Unit unit, const CostFunction& g) {
  return std::string("# ") + CommandName(config.command) + "  unit=" + UnitName(unit) +
         "  g=" + g.Describe() + "\n";
}

// ---------------------------------------------------------------- analyze

RunOutput RunAnalyze(const RunConfig& config) {
  const Unit unit = config.unit.value_or(Unit::kWords);
  const CostFunction g = MakeCostFunction(config.g_spec, config.allow_nonmonotone);
  const ConlluDocument doc = LoadCorpus(config);

  const auto reports = ParallelMap<CostReport>(
      doc.trees.size(), config.jobs, [&](std::size_t i) {
        const DepTree& tree = doc.trees[i];
        try {
          return ComputeCost(tree, Linearization::Identity(tree.size()), g, unit);
        } catch (const Error& e) {
          throw Error(e.code(), config.input_path + ": sentence " +
                                    std::to_string(i + 1) + " (line " +
                                    std::to_string(doc.first_lines[i]) + "): " + e.what());
        }
      });
  std::vector<Linearization> lins;
  for (const DepTree& tree : doc.trees) lins.push_back(Linearization::Identity(tree.size()));
  const LengthHistogram histogram = BuildHistogram(doc.trees, lins);

  RunOutput out;
  std::ostringstream s;
  switch (config.format) {
    case Format::kTable: {
      s << Header(config, unit, g);
      Table t({"sentence", "line", "n", "sum_lengths", "D"});
      for (std::size_t i = 0; i < reports.size(); ++i) {
        t.Add({std::to_string(i + 1), std::to_string(doc.first_lines[i]),
               std::to_string(reports[i].n), FormatDecimal(reports[i].sum_lengths),
               FormatDecimal(reports[i].D)});
      }
      s << t.Render() << "\n# length histogram (words), total_edges="
        << histogram.total_edges() << "\n";
      Table h({"d", "count", "p"});
      for (const auto& [d, count] : histogram.counts()) {
        h.Add({std::to_string(d), std::to_string(count),
               ToFractionString(histogram.proportion(d))});
      }
      s << h.Render();
      for (const std::string& r : doc.rejected) s << "# rejected " << r << "\n";
      break;
    }
    case Format::kJson: {
      Json j;
      j["command"] = "analyze";
      j["unit"] = UnitName(unit);
      j["g"] = g.Describe();
      Json sentences = Json::array();
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const CostReport& r = reports[i];
        Json o;
        o["sentence"] = i + 1;
        o["line"] = doc.first_lines[i];
        o["n"] = r.n;
        o["unit"] = UnitName(r.unit);
        PutRational(o, "sum_lengths", r.sum_lengths);
        PutRational(o, "D", r.D);
        if (r.histogram) {
          Json hist = Json::object();
          for (const auto& [d, count] : r.histogram->counts()) {
            hist[std::to_string(d)] = count;
          }
          o["histogram"] = hist;
        }
        sentences.push_back(o);
      }
      j["sentences"] = sentences;
      Json counts = Json::object();
      Json proportions = Json::object();
      for (const auto& [d, count] : histogram.counts()) {
        counts[std::to_string(d)] = count;
        proportions[std::to_string(d)] = RationalJson(histogram.proportion(d));
      }
      j["histogram"] = {{"unit", "words"},
                        {"total_edges", histogram.total_edges()},
                        {"counts", counts},
                        {"p", proportions}};
      j["rejected"] = doc.rejected;
      s << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv: {
      s << "d,count,p\n";
      for (const auto& [d, count] : histogram.counts()) {
        s << d << "," << count << "," << FormatDecimal(histogram.proportion(d)) << "\n";
      }
      break;
    }
  }
  out.text = s.str();
  return out;
}

// --------------------------------------------------------------- optimize

struct OptimizeRow {
  int n = 0;
  std::string method;  // exhaustive | projective | skipped
  Rational observed;
  std::optional<MlaResult> result;
  std::optional<Rational> gap;
};

RunOutput RunOptimize(const RunConfig& config) {
  const Unit unit = config.unit.value_or(Unit::kWords);
  const CostFunction g = MakeCostFunction(config.g_spec, config.allow_nonmonotone);
  if (config.max_n < 1 || config.max_n > kMaxBruteForceN) {
    throw Error(ErrorCode::kInvalidArgument, "--max-n must be within 1..10");
  }
  const ConlluDocument doc = LoadCorpus(config);

  const auto rows = ParallelMap<OptimizeRow>(doc.trees.size(), config.jobs, [&](std::size_t i) {
    const DepTree& tree = doc.trees[i];
    OptimizeRow row;
    row.n = static_cast<int>(tree.size());
    try {
      row.observed = ArrangementCost(tree, Linearization::Identity(tree.size()), unit, g);
      if (row.n <= config.max_n || config.exact) {
        SearchOptions options;
        options.max_n = config.max_n;
        row.method = "exhaustive";
        row.result = BruteForceMla(tree, unit, g, nullptr, options);
      } else if ((unit == Unit::kWords && g.is_identity()) ||
                 row.n <= kMaxProjectiveEnumerationN) {
        row.method = "projective";
        row.result = ProjectiveMla(tree, unit, g);
      } else {
        row.method = "skipped";
      }
    } catch (const Error& e) {
      throw Error(e.code(), config.input_path + ": sentence " + std::to_string(i + 1) +
                                " (line " + std::to_string(doc.first_lines[i]) +
                                "): " + e.what());
    }
    if (row.result) {
      row.gap = row.result->min_cost == 0 ? Rational(1)
                                          : Rational(row.observed / row.result->min_cost);
    }
    return row;
  });

  RunOutput out;
  std::ostringstream s;
  switch (config.format) {
    case Format::kTable: {
      s << Header(config, unit, g);
      Table t({"sentence", "n", "method", "observed", "optimal", "gap", "optima",
               "optimal_order"});
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const OptimizeRow& r = rows[i];
        if (!r.result) {
          t.Add({std::to_string(i + 1), std::to_string(r.n), r.method,
                 FormatDecimal(r.observed), "-", "-", "-", "-"});
          continue;
        }
        t.Add({std::to_string(i + 1), std::to_string(r.n), r.method,
               FormatDecimal(r.observed), FormatDecimal(r.result->min_cost),
               ToFractionString(*r.gap),
               r.method == "exhaustive" ? std::to_string(r.result->optimal_orders.size())
                                        : std::string("-"),
               Forms(doc.trees[i], r.result->representative())});
      }
      s << t.Render();
      break;
    }
    case Format::kJson: {
      Json j;
      j["command"] = "optimize";
      j["unit"] = UnitName(unit);
      j["g"] = g.Describe();
      j["max_n"] = config.max_n;
      Json sentences = Json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const OptimizeRow& r = rows[i];
        Json o;
        o["sentence"] = i + 1;
        o["n"] = r.n;
        o["method"] = r.method;
        PutRational(o, "observed", r.observed);
        if (r.result) {
          PutRational(o, "min_cost", r.result->min_cost);
          PutRational(o, "gap", *r.gap);
          if (r.method == "exhaustive") {
            o["optimal_count"] = r.result->optimal_orders.size();
          } else {
            o["optimal_count"] = nullptr;
          }
          o["searched"] = r.result->searched;
          o["representative_order"] = r.result->representative().order();
        }
        sentences.push_back(o);
      }
      j["sentences"] = sentences;
      s << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv: {
      s << "sentence,n,method,observed,optimal,gap,optimal_order\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const OptimizeRow& r = rows[i];
        s << i + 1 << "," << r.n << "," << r.method << "," << FormatDecimal(r.observed)
          << ",";
        if (r.result) {
          s << FormatDecimal(r.result->min_cost) << "," << ToFractionString(*r.gap) << ","
            << JoinInts(r.result->representative().order(), " ");
        } else {
          s << ",,";
        }
        s << "\n";
      }
      break;
    }
  }
  out.text = s.str();
  return out;
}

// ---------------------------------------------------------------- predict

Json PredictionJson(const PredictionReport& r) {
  Json o;
  o["name"] = r.name;
  o["asserted"] = r.asserted;
  o["holds"] = r.holds;
  o["expectation"] = r.expectation;
  o["detail"] = r.detail;
  o["tokens"] = r.labels;
  Json w;
  PutRational(w, "min_cost", r.witness.min_cost);
  w["optimal_count"] = r.witness.optimal_orders.size();
  w["searched"] = r.witness.searched;
  w["representative_order"] = RenderOrder(r.witness.representative(), r.labels);
  Json orders = Json::array();
  for (const Linearization& lin : r.witness.optimal_orders) {
    orders.push_back(RenderOrder(lin, r.labels));
  }
  w["optimal_orders"] = orders;
  o["witness"] = w;
  o["counterexample"] =
      r.counterexample ? Json(RenderOrder(*r.counterexample, r.labels)) : Json(nullptr);
  return o;
}

RunOutput RunPredict(const RunConfig& config) {
  if (config.unit && *config.unit != Unit::kWords) {
    throw Error(ErrorCode::kInvalidArgument, "predict uses the words unit only");
  }
  const CostFunction g = MakeCostFunction(config.g_spec, config.allow_nonmonotone);
  const std::vector<PredictionReport> reports = RunDefaultPredictions(g);

  int asserted = 0;
  int passed = 0;
  for (const PredictionReport& r : reports) {
    if (!r.asserted) continue;
    ++asserted;
    if (r.holds) ++passed;
  }

  Json j;
  j["command"] = "predict";
  j["unit"] = "words";
  j["g"] = g.Describe();
  j["asserted"] = asserted;
  j["passed"] = passed;
  Json scenarios = Json::array();
  for (const PredictionReport& r : reports) scenarios.push_back(PredictionJson(r));
  j["scenarios"] = scenarios;

  RunOutput out;
  out.json_report = j.dump(2) + "\n";
  out.exit_code = passed == asserted ? 0 : 1;
  std::ostringstream s;
  switch (config.format) {
    case Format::kTable: {
      s << Header(config, Unit::kWords, g);
      Table t({"scenario", "result", "min_cost", "optima", "representative", "expectation"});
      for (const PredictionReport& r : reports) {
        const std::string result = !r.asserted ? "REPORT" : (r.holds ? "PASS" : "FAIL");
        t.Add({r.name, result, FormatDecimal(r.witness.min_cost),
               std::to_string(r.witness.optimal_orders.size()),
               RenderOrder(r.witness.representative(), r.labels), r.expectation});
      }
      s << t.Render() << "\n";
      for (const PredictionReport& r : reports) {
        if (!r.detail.empty()) s << r.name << ": " << r.detail << "\n";
        if (r.counterexample) {
          s << r.name << ": counterexample " << RenderOrder(*r.counterexample, r.labels)
            << "\n";
        }
      }
      s << "\n" << passed << "/" << asserted << " asserted predictions hold\n";
      break;
    }
    case Format::kJson:
      s << out.json_report;
      break;
    case Format::kCsv:
      s << "scenario,asserted,holds,min_cost,optimal_count,representative\n";
      for (const PredictionReport& r : reports) {
        s << r.name << "," << (r.asserted ? "true" : "false") << ","
          << (r.holds ? "true" : "false") << "," << ToFractionString(r.witness.min_cost)
          << "," << r.witness.optimal_orders.size() << ","
          << RenderOrder(r.witness.representative(), r.labels) << "\n";
      }
      break;
  }
  out.text = s.str();
  return out;
}

// ------------------------------------------------------------------- pair

struct PairRow {
  std::string label;
  std::vector<Rational> p;
  std::vector<Rational> g;
  PairingResult sorted;
  Rational exhaustive;
  bool optimal = false;
  // Only meaningful when p is strictly decreasing in d.
  std::optional<bool> induced_monotone;
};

PairRow EvaluatePairing(std::string label, std::vector<Rational> p, std::vector<Rational> g) {
  PairRow row;
  row.label = std::move(label);
  row.sorted = OptimalPairing(p, g);
  row.exhaustive = ExhaustivePairingMinimum(p, g);
  row.optimal = row.sorted.total == row.exhaustive;
  bool strictly_decreasing = true;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!(p[i] < p[i - 1])) strictly_decreasing = false;
  }
  if (strictly_decreasing) {
    bool monotone = true;
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (row.sorted.assignment[i] < row.sorted.assignment[i - 1]) monotone = false;
    }
    row.induced_monotone = monotone;
  }
  row.p = std::move(p);
  row.g = std::move(g);
  return row;
}

std::string JoinRationals(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += " ";
    out += FormatDecimal(values[i]);
  }
  return out;
}

RunOutput RunPair(const RunConfig& config) {
  std::vector<PairRow> rows;
  if (!config.pair_p.empty() || !config.pair_g.empty()) {
    std::vector<Rational> p;
    std::vector<Rational> g;
    for (const auto& v : config.pair_p) p.push_back(ParseRational(v));
    for (const auto& v : config.pair_g) g.push_back(ParseRational(v));
    rows.push_back(EvaluatePairing("given", std::move(p), std::move(g)));
  } else {
    rows.push_back(EvaluatePairing("demo",
                                   {MakeRational(1, 2), MakeRational(3, 10), MakeRational(1, 5)},
                                   {Rational(1), Rational(2), Rational(3)}));
  }
  if (config.pair_instances < 0) {
    throw Error(ErrorCode::kInvalidArgument, "--instances must be non-negative");
  }
  // Proportions p(d) from random counts sorted by decreasing frequency, with
  // random g values in random order.
  std::mt19937_64 rng(config.seed);
  for (int i = 0; i < config.pair_instances; ++i) {
    const int m = 1 + static_cast<int>(rng() % 8);
    std::vector<std::int64_t> counts(m);
    std::int64_t total = 0;
    for (auto& c : counts) {
      c = 1 + static_cast<std::int64_t>(rng() % 50);
      total += c;
    }
    std::sort(counts.rbegin(), counts.rend());
    std::vector<Rational> p;
    for (auto c : counts) p.push_back(MakeRational(c, total));
    std::vector<Rational> g;
    for (int k = 0; k < m; ++k) g.push_back(Rational(1 + static_cast<std::int64_t>(rng() % 20)));
    rows.push_back(EvaluatePairing("random " + std::to_string(i + 1), std::move(p), std::move(g)));
  }

  bool all_ok = true;
  for (const PairRow& r : rows) {
    if (!r.optimal || (r.induced_monotone && !*r.induced_monotone)) all_ok = false;
  }

  RunOutput out;
  out.exit_code = all_ok ? 0 : 1;
  std::ostringstream s;
  auto monotone_text = [](const PairRow& r) -> std::string {
    if (!r.induced_monotone) return "n/a";
    return *r.induced_monotone ? "yes" : "no";
  };
  switch (config.format) {
    case Format::kTable: {
      s << "# pair  seed=" << config.seed << "  instances=" << config.pair_instances << "\n";
      Table t({"instance", "m", "sorted_total", "exhaustive_min", "optimal",
               "induced_g_nondecreasing", "assignment"});
      for (const PairRow& r : rows) {
        t.Add({r.label, std::to_string(r.p.size()), FormatDecimal(r.sorted.total),
               FormatDecimal(r.exhaustive), r.optimal ? "yes" : "no", monotone_text(r),
               JoinRationals(r.sorted.assignment)});
      }
      s << t.Render() << "\n" << (all_ok ? "all pairings optimal" : "FAILED") << "\n";
      break;
    }
    case Format::kJson: {
      Json j;
      j["command"] = "pair";
      j["seed"] = config.seed;
      Json instances = Json::array();
      for (const PairRow& r : rows) {
        Json o;
        o["instance"] = r.label;
        o["m"] = r.p.size();
        Json p = Json::array();
        Json g = Json::array();
        Json a = Json::array();
        for (const auto& v : r.p) p.push_back(RationalJson(v));
        for (const auto& v : r.g) g.push_back(RationalJson(v));
        for (const auto& v : r.sorted.assignment) a.push_back(RationalJson(v));
        o["p"] = p;
        o["g"] = g;
        o["assignment"] = a;
        PutRational(o, "total", r.sorted.total);
        PutRational(o, "exhaustive_min", r.exhaustive);
        o["optimal"] = r.optimal;
        o["induced_g_nondecreasing"] =
            r.induced_monotone ? Json(*r.induced_monotone) : Json(nullptr);
        instances.push_back(o);
      }
      j["instances"] = instances;
      j["all_optimal"] = all_ok;
      s << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      s << "instance,m,sorted_total,exhaustive_min,optimal,induced_g_nondecreasing\n";
      for (const PairRow& r : rows) {
        s << r.label << "," << r.p.size() << "," << ToFractionString(r.sorted.total) << ","
          << ToFractionString(r.exhaustive) << "," << (r.optimal ? "yes" : "no") << ","
          << monotone_text(r) << "\n";
      }
      break;
  }
  out.text = s.str();
  return out;
}

// -------------------------------------------------------------- casestudy

std::string EdgeText(const EdgeLength& e, const DepTree& tree) {
  return tree.token(e.edge.dependent).form + "->" + tree.token(e.edge.head).form + "=" +
         FormatDecimal(e.value());
}

RunOutput RunCaseStudy(const RunConfig& config) {
  const Unit unit = config.unit.value_or(Unit::kCharacters);
  const CaseStudyReport report = CompareFixture(unit);
  const FrenchFixtures fx = FrenchFixture();
  const DepTree* trees[] = {&fx.a.tree, &fx.b.tree, &fx.c.tree};

  RunOutput out;
  out.exit_code = report.b_below_c ? 0 : 1;
  std::ostringstream s;
  switch (config.format) {
    case Format::kTable: {
      s << "# casestudy  unit=" << UnitName(unit) << "\n";
      Table t({"fixture", "sentence", "edges", "sum", "description"});
      for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const FixtureRow& r = report.rows[i];
        std::string edges;
        for (const EdgeLength& e : r.edges) {
          if (!edges.empty()) edges += ", ";
          edges += EdgeText(e, *trees[i]);
        }
        t.Add({std::string(1, r.label), r.sentence, edges, FormatDecimal(r.sum), r.gloss});
      }
      s << t.Render() << "\n";
      s << "ranking by increasing sum: " << report.ranking << "\n";
      s << "sum(b) < sum(c): " << (report.b_below_c ? "PASS" : "FAIL") << "\n";
      s << "sum(b) between sum(a) and sum(c): "
        << (report.b_between_a_and_c ? "yes" : "no") << " (reported, not asserted)\n";
      break;
    }
    case Format::kJson: {
      Json j;
      j["command"] = "casestudy";
      j["unit"] = UnitName(unit);
      Json fixtures = Json::array();
      for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const FixtureRow& r = report.rows[i];
        Json o;
        o["label"] = std::string(1, r.label);
        o["sentence"] = r.sentence;
        o["description"] = r.gloss;
        Json edges = Json::array();
        for (const EdgeLength& e : r.edges) {
          Json ej;
          ej["head"] = trees[i]->token(e.edge.head).form;
          ej["dependent"] = trees[i]->token(e.edge.dependent).form;
          PutRational(ej, "length", e.value());
          edges.push_back(ej);
        }
        o["edges"] = edges;
        PutRational(o, "sum", r.sum);
        fixtures.push_back(o);
      }
      j["fixtures"] = fixtures;
      j["ranking"] = report.ranking;
      j["b_below_c"] = report.b_below_c;
      j["b_between_a_and_c"] = report.b_between_a_and_c;
      s << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv:
      s << "fixture,sum,edges\n";
      for (const FixtureRow& r : report.rows) {
        s << r.label << "," << FormatDecimal(r.sum) << ",";
        for (std::size_t k = 0; k < r.edges.size(); ++k) {
          if (k > 0) s << " ";
          s << FormatDecimal(r.edges[k].value());
        }
        s << "\n";
      }
      break;
  }
  out.text = s.str();
  return out;
}

}  // namespace

Command ParseCommand(const std::string& name) {
  if (name == "analyze") return Command::kAnalyze;
  if (name == "optimize") return Command::kOptimize;
  if (name == "predict") return Command::kPredict;
  if (name == "pair") return Command::kPair;
  if (name == "casestudy") return Command::kCaseStudy;
  throw Error(ErrorCode::kInvalidArgument, "unknown command '" + name + "'");
}

Format ParseFormat(const std::string& name) {
  if (name == "table") return Format::kTable;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown format '" + name + "' (expected table|json|csv)");
}

const char* CommandName(Command command) {
  switch (command) {
    case Command::kAnalyze: return "analyze";
    case Command::kOptimize: return "optimize";
    case Command::kPredict: return "predict";
    case Command::kPair: return "pair";
    case Command::kCaseStudy: return "casestudy";
  }
  return "";
}


RunOutput Run(const RunConfig& config) {
  switch (config.command) {
    case Command::kAnalyze: return RunAnalyze(config);
    case Command::kOptimize: return RunOptimize(config);
    case Command::kPredict: return RunPredict(config);
    case Command::kPair: return RunPair(config);
    case Command::kCaseStudy: return RunCaseStudy(config);
  }
  throw Error(ErrorCode::kInternal, "unknown command");
}

}  // namespace deplen
