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

#ifndef DEPLEN_COST_MODELS_HPP_
#define DEPLEN_COST_MODELS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "deplen/rational.hpp"

namespace deplen {

// Cost g(d) of a single dependency of length d > 0.
//
// Identity, integer powers and tables evaluate exactly. Logarithmic and
// fractional powers are evaluated in double precision and the resulting
// double is then carried as an exact rational, so downstream sums remain
// exact over those (rounded) values.
class CostFunction {
 public:
  enum class Kind { kIdentity, kPower, kLogarithmic, kTable };

  static CostFunction Identity();
  // exponent > 0; integer exponents up to 64 are exact.
  static CostFunction Power(const Rational& exponent);
  // g(d) = log(1 + d).
  static CostFunction Logarithmic();
  // `values` must cover 1..max key without gaps. Unless allow_nonmonotone
  // is set, the values must be strictly increasing (kNonMonotone otherwise).
  static CostFunction Table(std::map<int, Rational> values,
                            bool allow_nonmonotone = false);

  Kind kind() const { return kind_; }
  const Rational& exponent() const { return exponent_; }
  // Largest d a table is defined on; unset for the closed-form kinds.
  std::optional<int> domain_max() const;
  bool exact() const;
  bool is_identity() const { return kind_ == Kind::kIdentity; }

  // Throws kDomain if d <= 0 or the function is undefined at d.
  Rational operator()(const Rational& d) const;

  // Text form as accepted by MakeCostFunction: "identity", "power:2", "log" or "table".
  std::string Describe() const;

 private:
  CostFunction() = default;

  Kind kind_ = Kind::kIdentity;
  Rational exponent_ = 1;
  std::map<int, Rational> table_;
};

// Parses "identity", "power:ALPHA", "log" or "table:PATH". Tables are read
// from a CSV file of "d,cost" rows (an optional header row and '#' comments
// are ignored).
CostFunction MakeCostFunction(std::string_view spec, bool allow_nonmonotone = false);

// Table from CSV text.
CostFunction ParseCostTable(std::string_view csv, bool allow_nonmonotone = false);

struct PairingResult {
  // assignment[i] is the g value paired with p_values[i].
  std::vector<Rational> assignment;
  // g_index[i] is the index into g_values of that value.
  std::vector<std::size_t> g_index;
  Rational total;
};

// Minimizes sum_i p_i * g_sigma(i) over bijections sigma by pairing the
// largest p with the smallest g. Equal values are paired in input order.
//
// Errors: kSizeMismatch (sizes differ or are zero), kInvalidArgument
// (negative p).
PairingResult OptimalPairing(std::span<const Rational> p_values,
                             std::span<const Rational> g_values);

// Minimum of sum p * g over all m! bijections. m <= 8, kTooLarge otherwise.
Rational ExhaustivePairingMinimum(std::span<const Rational> p_values,
                                  std::span<const Rational> g_values);

// OptimalPairing(...).total == ExhaustivePairingMinimum(...).
bool VerifyPairingOptimal(std::span<const Rational> p_values,
                          std::span<const Rational> g_values);

}  // namespace deplen

#endif  // DEPLEN_COST_MODELS_HPP_
