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

#include "deplen/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <numeric>
#include <optional>
#include <thread>

#include "deplen/error.hpp"
#include "deplen/metrics.hpp"

namespace deplen {
namespace {

// g evaluated at every length a linearization of `tree` can produce, indexed
// by scaled length (positions for Words, half-units for Characters). When all
// values share a denominator small enough, costs are summed as int64
// numerators over that denominator.
class CostTable {
 public:
  CostTable(const DepTree& tree, Unit unit, const CostFunction& g) : unit_(unit) {
    const int n = static_cast<int>(tree.size());
    std::int64_t max_scaled = n - 1;
    if (unit == Unit::kCharacters) {
      std::int64_t chars = 0;
      for (const Token& t : tree.tokens()) chars += t.char_length + 1;
      max_scaled = 2 * chars;
    }
    values_.resize(max_scaled + 1);
    for (std::int64_t k = 1; k <= max_scaled; ++k) {
      const Rational d = unit == Unit::kWords ? Rational(k) : FromHalfUnits(k);
      try {
        values_[k] = g(d);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kDomain) throw;
        errors_.resize(max_scaled + 1);
        errors_[k] = e.what();
      }
    }

    BigInt common = 1;
    for (const auto& v : values_) {
      if (v) common = boost::multiprecision::lcm(common, BigInt(boost::multiprecision::denominator(*v)));
    }
    // Leave headroom for summing up to n - 1 terms.
    const BigInt limit = BigInt(std::numeric_limits<std::int64_t>::max() / 64);
    bool fits = common <= limit;
    std::vector<std::int64_t> scaled(values_.size(), 0);
    for (std::size_t k = 0; fits && k < values_.size(); ++k) {
      if (!values_[k]) continue;
      const Rational s = *values_[k] * Rational(common);
      const BigInt num = boost::multiprecision::numerator(s);
      if (num > limit || num < -limit) {
        fits = false;
      } else {
        scaled[k] = num.convert_to<std::int64_t>();
      }
    }
    if (fits) {
      scaled_ = std::move(scaled);
      denominator_ = common.convert_to<std::int64_t>();
    }
  }

  bool integral() const { return !scaled_.empty(); }
  Unit unit() const { return unit_; }
  std::int64_t denominator() const { return denominator_; }

  std::int64_t Scaled(std::int64_t k) const {
    Check(k);
    return scaled_[k];
  }
  const Rational& Value(std::int64_t k) const {
    Check(k);
    return *values_[k];
  }

 private:
  void Check(std::int64_t k) const {
    if (k <= 0 || k >= static_cast<std::int64_t>(values_.size())) {
      throw Error(ErrorCode::kInternal, "length outside the cost table");
    }
    if (!values_[k]) throw Error(ErrorCode::kDomain, errors_[k]);
  }

  Unit unit_;
  std::vector<std::optional<Rational>> values_;
  std::vector<std::string> errors_;
  std::vector<std::int64_t> scaled_;
  std::int64_t denominator_ = 1;
};

// Constraint checks over a position array (positions[token - 1]).
class ConstraintChecker {
 public:
  ConstraintChecker(const PrecedenceConstraint* constraint, int n) {
    if (constraint == nullptr) return;
    std::vector<int> owner(n + 1, -1);
    auto check_token = [n](int t) {
      if (t < 1 || t > n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "constraint names token " + std::to_string(t) +
                        ", which is not in the tree");
      }
    };
    for (const auto& [a, b] : constraint->pairs) {
      check_token(a);
      check_token(b);
    }
    for (std::size_t i = 0; i < constraint->blocks.size(); ++i) {
      if (constraint->blocks[i].empty()) {
        throw Error(ErrorCode::kInvalidArgument, "constraint block is empty");
      }
      for (int t : constraint->blocks[i]) {
        check_token(t);
        if (owner[t] != -1) {
          throw Error(ErrorCode::kInvalidArgument,
                      "token " + std::to_string(t) + " appears in two blocks");
        }
        owner[t] = static_cast<int>(i);
      }
    }
    pairs_ = constraint->pairs;
    blocks_ = constraint->blocks;
    CheckAcyclic(n);
  }

  bool Satisfied(const std::vector<int>& positions) const {
    for (const auto& [a, b] : pairs_) {
      if (positions[a - 1] >= positions[b - 1]) return false;
    }
    int previous_last = 0;
    for (const auto& block : blocks_) {
      int lo = std::numeric_limits<int>::max();
      int hi = 0;
      for (int t : block) {
        lo = std::min(lo, positions[t - 1]);
        hi = std::max(hi, positions[t - 1]);
      }
      if (hi - lo + 1 != static_cast<int>(block.size())) return false;
      if (lo <= previous_last) return false;
      previous_last = hi;
    }
    return true;
  }

 private:
  void CheckAcyclic(int n) const {
    std::vector<std::vector<int>> after(n + 1);
    std::vector<int> indegree(n + 1, 0);
    for (const auto& [a, b] : pairs_) {
      if (a == b) {
        throw Error(ErrorCode::kInfeasibleConstraints,
                    "token " + std::to_string(a) + " cannot precede itself");
      }
      after[a].push_back(b);
      ++indegree[b];
    }
    std::vector<int> ready;
    for (int t = 1; t <= n; ++t) {
      if (indegree[t] == 0) ready.push_back(t);
    }
    int seen = 0;
    while (!ready.empty()) {
      const int t = ready.back();
      ready.pop_back();
      ++seen;
      for (int u : after[t]) {
        if (--indegree[u] == 0) ready.push_back(u);
      }
    }
    if (seen != n) {
      throw Error(ErrorCode::kInfeasibleConstraints, "precedence pairs form a cycle");
    }
  }

  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<int>> blocks_;
};

template <typename CostT>
struct PartialResult {
  std::optional<CostT> best;
  std::vector<std::vector<int>> optima;
  std::uint64_t searched = 0;
};

// Scaled length of every edge under the given order.
void EdgeLengths(const DepTree& tree, Unit unit, const std::vector<int>& order,
                 std::vector<int>& positions, std::vector<std::int64_t>& centers,
                 std::vector<std::int64_t>& lengths) {
  for (std::size_t k = 0; k < order.size(); ++k) {
    positions[order[k] - 1] = static_cast<int>(k) + 1;
  }
  const auto edges = tree.edges();
  if (unit == Unit::kWords) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      lengths[i] = std::abs(positions[edges[i].head - 1] - positions[edges[i].dependent - 1]);
    }
    return;
  }
  std::int64_t start = 1;
  for (int t : order) {
    const std::int64_t lambda = tree.token(t).char_length;
    centers[t - 1] = 2 * start + lambda - 1;
    start += lambda + 1;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    lengths[i] = std::abs(centers[edges[i].head - 1] - centers[edges[i].dependent - 1]);
  }
}

// Enumerates every order starting with `first`, in lexicographic order.
template <typename CostT, typename Score>
PartialResult<CostT> SearchFrom(const DepTree& tree, Unit unit, int first,
                                const ConstraintChecker& checker, const Score& score) {
  const int n = static_cast<int>(tree.size());
  std::vector<int> order;
  order.reserve(n);
  order.push_back(first);
  for (int t = 1; t <= n; ++t) {
    if (t != first) order.push_back(t);
  }
  std::vector<int> positions(n);
  std::vector<std::int64_t> centers(n);
  std::vector<std::int64_t> lengths(tree.edges().size());

  PartialResult<CostT> out;
  do {
    EdgeLengths(tree, unit, order, positions, centers, lengths);
    if (!checker.Satisfied(positions)) continue;
    ++out.searched;
    const CostT cost = score(lengths);
    if (!out.best || cost < *out.best) {
      out.best = cost;
      out.optima.clear();
      out.optima.push_back(order);
    } else if (cost == *out.best) {
      out.optima.push_back(order);
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return out;
}

template <typename CostT, typename Score>
std::pair<std::optional<CostT>, MlaResult> Search(const DepTree& tree, Unit unit,
                                                  const ConstraintChecker& checker,
                                                  const Score& score, int jobs) {
  const int n = static_cast<int>(tree.size());
  std::vector<PartialResult<CostT>> parts(n);
  std::vector<std::exception_ptr> failures(n);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        parts[i] = SearchFrom<CostT>(tree, unit, i + 1, checker, score);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(jobs, 1, n);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  // Parts are in first-token order, so concatenation stays lexicographic.
  std::optional<CostT> best;
  MlaResult result;
  for (const auto& part : parts) {
    result.searched += part.searched;
    if (part.best && (!best || *part.best < *best)) best = part.best;
  }
  for (const auto& part : parts) {
    if (!part.best || *part.best != *best) continue;
    for (const auto& order : part.optima) {
      result.optimal_orders.push_back(Linearization::FromOrder(order));
    }
  }
  return {best, std::move(result)};
}

// Projective orders of the subtree rooted at the first unexpanded entry.
// Entries > 0 are placed tokens; entries < 0 are subtrees still to expand.
void ExpandProjective(std::vector<int>& seq, const DepTree& tree,
                      const std::function<void(const Linearization&)>& visit) {
  const auto pending = std::find_if(seq.begin(), seq.end(), [](int x) { return x < 0; });
  if (pending == seq.end()) {
    visit(Linearization::FromOrder(seq));
    return;
  }
  const auto at = pending - seq.begin();
  const int v = -*pending;
  std::vector<int> items{v};
  for (int c : tree.children(v)) items.push_back(-c);
  std::sort(items.begin(), items.end());
  do {
    std::vector<int> next;
    next.reserve(seq.size() + items.size() - 1);
    next.insert(next.end(), seq.begin(), seq.begin() + at);
    next.insert(next.end(), items.begin(), items.end());
    next.insert(next.end(), seq.begin() + at + 1, seq.end());
    ExpandProjective(next, tree, visit);
  } while (std::next_permutation(items.begin(), items.end()));
}

// Minimum projective arrangement of the subtree of v, appended to `out`.
// side: 0 at the root, -1 when v's head lies to the left of v's block, +1
// when it lies to the right. Children are taken by decreasing subtree size;
// they alternate sides so that the largest blocks end up outermost, and for
// a non-root node the largest block goes on the side away from its head.
void ArrangeSubtree(const DepTree& tree, int v, int side, std::vector<int>& out) {
  std::vector<int> kids(tree.children(v).begin(), tree.children(v).end());
  std::stable_sort(kids.begin(), kids.end(), [&](int a, int b) {
    return tree.subtree_size(a) > tree.subtree_size(b);
  });
  // Outermost first.
  std::vector<int> left;
  std::vector<int> right;
  const bool first_goes_right = side < 0;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    const bool to_right = (i % 2 == 0) == first_goes_right;
    (to_right ? right : left).push_back(kids[i]);
  }
  for (int c : left) ArrangeSubtree(tree, c, +1, out);
  out.push_back(v);
  for (auto it = right.rbegin(); it != right.rend(); ++it) {
    ArrangeSubtree(tree, *it, -1, out);
  }
}

}  // namespace

bool PrecedenceConstraint::SatisfiedBy(const Linearization& lin) const {
  ConstraintChecker checker(this, static_cast<int>(lin.size()));
  return checker.Satisfied(lin.positions());
}

MlaResult BruteForceMla(const DepTree& tree, Unit unit, const CostFunction& g,
                        const PrecedenceConstraint* constraint,
                        const SearchOptions& options) {
  const int n = static_cast<int>(tree.size());
  const int limit = std::min(options.max_n, kMaxBruteForceN);
  if (n > limit) {
    throw Error(ErrorCode::kTooLarge, "exhaustive search is limited to n <= " +
                                          std::to_string(limit) + ", got n = " +
                                          std::to_string(n));
  }
  const ConstraintChecker checker(constraint, n);
  const CostTable table(tree, unit, g);

  MlaResult result;
  if (table.integral()) {
    auto score = [&table](const std::vector<std::int64_t>& lengths) {
      std::int64_t total = 0;
      for (std::int64_t k : lengths) total += table.Scaled(k);
      return total;
    };
    auto [best, r] = Search<std::int64_t>(tree, unit, checker, score, options.jobs);
    if (best) r.min_cost = MakeRational(*best, table.denominator());
    result = std::move(r);
  } else {
    auto score = [&table](const std::vector<std::int64_t>& lengths) {
      Rational total = 0;
      for (std::int64_t k : lengths) total += table.Value(k);
      return total;
    };
    auto [best, r] = Search<Rational>(tree, unit, checker, score, options.jobs);
    if (best) r.min_cost = *best;
    result = std::move(r);
  }
  if (result.optimal_orders.empty()) {
    throw Error(ErrorCode::kInfeasibleConstraints,
                "no linearization satisfies the constraints");
  }
  return result;
}

void ForEachProjective(const DepTree& tree,
                       const std::function<void(const Linearization&)>& visit) {
  if (static_cast<int>(tree.size()) > kMaxProjectiveEnumerationN) {
    throw Error(ErrorCode::kTooLarge,
                "projective enumeration is limited to n <= " +
                    std::to_string(kMaxProjectiveEnumerationN));
  }
  std::vector<int> seq{-tree.root()};
  ExpandProjective(seq, tree, visit);
}

std::vector<Linearization> EnumerateProjective(const DepTree& tree) {
  std::vector<Linearization> out;
  ForEachProjective(tree, [&](const Linearization& lin) { out.push_back(lin); });
  return out;
}

Rational ArrangementCost(const DepTree& tree, const Linearization& lin, Unit unit,
                         const CostFunction& g) {
  Rational total = 0;
  for (const EdgeLength& e : MeasureEdges(tree, lin, unit)) total += g(e.value());
  return total;
}

MlaResult ProjectiveMla(const DepTree& tree) {
  std::vector<int> order;
  order.reserve(tree.size());
  ArrangeSubtree(tree, tree.root(), 0, order);
  MlaResult result;
  result.optimal_orders.push_back(Linearization::FromOrder(std::move(order)));
  result.min_cost = SumLengths(tree, result.optimal_orders.front(), Unit::kWords);
  result.searched = 1;
  return result;
}

MlaResult ProjectiveMla(const DepTree& tree, Unit unit, const CostFunction& g) {
  if (unit == Unit::kWords && g.is_identity()) return ProjectiveMla(tree);
  MlaResult result;
  std::optional<Rational> best;
  ForEachProjective(tree, [&](const Linearization& lin) {
    ++result.searched;
    Rational cost = ArrangementCost(tree, lin, unit, g);
    if (!best || cost < *best) {
      best = std::move(cost);
      result.optimal_orders.clear();
      result.optimal_orders.push_back(lin);
    } else if (cost == *best) {
      result.optimal_orders.push_back(lin);
    }
  });
  std::sort(result.optimal_orders.begin(), result.optimal_orders.end());
  result.min_cost = *best;
  return result;
}

}  // namespace deplen
