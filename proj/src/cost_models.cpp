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

#include "deplen/cost_models.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "deplen/error.hpp"

namespace deplen {
namespace {

constexpr int kMaxExactExponent = 64;
constexpr std::size_t kMaxExhaustivePairing = 8;

bool IsInteger(const Rational& r) { return denominator(r) == 1; }

Rational IntegerPower(const Rational& base, int exponent) {
  Rational result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

CostFunction CostFunction::Identity() { return CostFunction(); }

CostFunction CostFunction::Power(const Rational& exponent) {
  if (exponent <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "power exponent must be positive, got " + ToFractionString(exponent));
  }
  if (IsInteger(exponent) && exponent > kMaxExactExponent) {
    throw Error(ErrorCode::kInvalidArgument, "power exponent too large");
  }
  CostFunction g;
  g.kind_ = Kind::kPower;
  g.exponent_ = exponent;
  return g;
}

CostFunction CostFunction::Logarithmic() {
  CostFunction g;
  g.kind_ = Kind::kLogarithmic;
  return g;
}

CostFunction CostFunction::Table(std::map<int, Rational> values,
                                 bool allow_nonmonotone) {
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cost table is empty");
  }
  int expected = 1;
  for (const auto& [d, cost] : values) {
    if (d != expected) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cost table must define every d in 1.." +
                      std::to_string(values.rbegin()->first) + "; missing d=" +
                      std::to_string(expected));
    }
    ++expected;
  }
  if (!allow_nonmonotone) {
    for (auto it = std::next(values.begin()); it != values.end(); ++it) {
      const auto prev = std::prev(it);
      if (!(prev->second < it->second)) {
        throw Error(ErrorCode::kNonMonotone,
                    "cost table is not strictly increasing at d=" +
                        std::to_string(it->first) + " (g(" +
                        std::to_string(prev->first) + ")=" +
                        ToFractionString(prev->second) + ", g(" +
                        std::to_string(it->first) + ")=" +
                        ToFractionString(it->second) + ")");
      }
    }
  }
  CostFunction g;
  g.kind_ = Kind::kTable;
  g.table_ = std::move(values);
  return g;
}

std::optional<int> CostFunction::domain_max() const {
  if (kind_ != Kind::kTable) return std::nullopt;
  return table_.rbegin()->first;
}

bool CostFunction::exact() const {
  switch (kind_) {
    case Kind::kIdentity:
    case Kind::kTable:
      return true;
    case Kind::kPower:
      return IsInteger(exponent_);
    case Kind::kLogarithmic:
      return false;
  }
  return false;
}

Rational CostFunction::operator()(const Rational& d) const {
  if (d <= 0) {
    throw Error(ErrorCode::kDomain,
                "cost is undefined at non-positive length " + ToFractionString(d));
  }
  switch (kind_) {
    case Kind::kIdentity:
      return d;
    case Kind::kPower:
      if (IsInteger(exponent_)) {
        return IntegerPower(d, numerator(exponent_).convert_to<int>());
      }
      return FromDouble(std::pow(ToDouble(d), ToDouble(exponent_)));
    case Kind::kLogarithmic:
      return FromDouble(std::log1p(ToDouble(d)));
    case Kind::kTable: {
      if (!IsInteger(d) || d > table_.rbegin()->first) {
        throw Error(ErrorCode::kDomain, "cost table is undefined at d=" +
                                            ToFractionString(d));
      }
      return table_.at(numerator(d).convert_to<int>());
    }
  }
  throw Error(ErrorCode::kInternal, "unknown cost kind");
}

std::string CostFunction::Describe() const {
  switch (kind_) {
    case Kind::kIdentity:
      return "identity";
    case Kind::kPower:
      if (IsInteger(exponent_)) return "power:" + numerator(exponent_).str();
      return "power:" + ToFractionString(exponent_);
    case Kind::kLogarithmic:
      return "log";
    case Kind::kTable:
      return "table";
  }
  return "unknown";
}

CostFunction ParseCostTable(std::string_view csv, bool allow_nonmonotone) {
  std::map<int, Rational> values;
  std::istringstream in{std::string(csv)};
  std::string line;
  std::size_t line_no = 0;
  bool seen_row = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') {
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ParseError(line_no, "expected 'd,cost'");
    }
    Rational d;
    Rational cost;
    try {
      d = ParseRational(line.substr(0, comma));
    } catch (const Error&) {
      if (!seen_row) {  // header
        seen_row = true;
        continue;
      }
      throw ParseError(line_no, "malformed cost table row '" + line + "'");
    }
    try {
      cost = ParseRational(line.substr(comma + 1));
    } catch (const Error&) {
      throw ParseError(line_no, "malformed cost table row '" + line + "'");
    }
    seen_row = true;
    if (!IsInteger(d) || d < 1 || d > 1000000) {
      throw ParseError(line_no, "d must be a positive integer");
    }
    const int key = numerator(d).convert_to<int>();
    if (!values.emplace(key, cost).second) {
      throw ParseError(line_no, "duplicate d=" + std::to_string(key));
    }
  }
  return CostFunction::Table(std::move(values), allow_nonmonotone);
}

CostFunction MakeCostFunction(std::string_view spec, bool allow_nonmonotone) {
  if (spec == "identity") return CostFunction::Identity();
  if (spec == "log") return CostFunction::Logarithmic();
  if (spec.starts_with("power:")) {
    Rational exponent;
    try {
      exponent = ParseRational(spec.substr(6));
    } catch (const Error&) {
      throw Error(ErrorCode::kInvalidArgument,
                  "malformed exponent in '" + std::string(spec) + "'");
    }
    return CostFunction::Power(exponent);
  }
  if (spec.starts_with("table:")) {
    const std::string path(spec.substr(6));
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::kIo, "cannot open cost table '" + path + "'");
    std::ostringstream content;
    content << file.rdbuf();
    try {
      return ParseCostTable(content.str(), allow_nonmonotone);
    } catch (const ParseError& e) {
      throw Error(ErrorCode::kParse, path + ": " + e.what());
    }
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown cost function '" + std::string(spec) +
                  "' (expected identity|power:ALPHA|log|table:PATH)");
}

PairingResult OptimalPairing(std::span<const Rational> p_values,
                             std::span<const Rational> g_values) {
  const std::size_t m = p_values.size();
  if (m == 0 || g_values.size() != m) {
    throw Error(ErrorCode::kSizeMismatch,
                "pairing needs two non-empty multisets of equal size (got " +
                    std::to_string(m) + " and " + std::to_string(g_values.size()) +
                    ")");
  }
  for (const Rational& p : p_values) {
    if (p < 0) throw Error(ErrorCode::kInvalidArgument, "p values must be non-negative");
  }
  std::vector<std::size_t> p_rank(m);
  std::vector<std::size_t> g_rank(m);
  std::iota(p_rank.begin(), p_rank.end(), 0);
  std::iota(g_rank.begin(), g_rank.end(), 0);
  std::stable_sort(p_rank.begin(), p_rank.end(), [&](std::size_t a, std::size_t b) {
    return p_values[a] > p_values[b];
  });
  std::stable_sort(g_rank.begin(), g_rank.end(), [&](std::size_t a, std::size_t b) {
    return g_values[a] < g_values[b];
  });

  PairingResult result;
  result.assignment.resize(m);
  result.g_index.resize(m);
  result.total = 0;
  for (std::size_t r = 0; r < m; ++r) {
    result.g_index[p_rank[r]] = g_rank[r];
    result.assignment[p_rank[r]] = g_values[g_rank[r]];
    result.total += p_values[p_rank[r]] * g_values[g_rank[r]];
  }
  return result;
}

Rational ExhaustivePairingMinimum(std::span<const Rational> p_values,
                                  std::span<const Rational> g_values) {
  const std::size_t m = p_values.size();
  if (m == 0 || g_values.size() != m) {
    throw Error(ErrorCode::kSizeMismatch, "pairing sizes differ or are zero");
  }
  if (m > kMaxExhaustivePairing) {
    throw Error(ErrorCode::kTooLarge,
                "exhaustive pairing is limited to m <= 8, got " + std::to_string(m));
  }
  std::vector<std::size_t> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::optional<Rational> best;
  do {
    Rational total = 0;
    for (std::size_t i = 0; i < m; ++i) total += p_values[i] * g_values[sigma[i]];
    if (!best || total < *best) best = total;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return *best;
}

bool VerifyPairingOptimal(std::span<const Rational> p_values,
                          std::span<const Rational> g_values) {
  const Rational exhaustive = ExhaustivePairingMinimum(p_values, g_values);
  return OptimalPairing(p_values, g_values).total == exhaustive;
}

}  // namespace deplen
