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

#ifndef DEPLEN_RATIONAL_HPP_
#define DEPLEN_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace deplen {

// Arbitrary precision exact rational. All lengths and costs are carried in
// this type so that identities between different summation orders hold with
// exact equality.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational MakeRational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// Half-units (doubled integers) to the represented value.
inline Rational FromHalfUnits(std::int64_t half_units) {
  return MakeRational(half_units, 2);
}

// Canonical "p/q" rendering; integers render as "p/1".
std::string ToFractionString(const Rational& value);

// Exact decimal if the value terminates within 6 fractional digits, else
// rounded to 6 fractional digits.
std::string FormatDecimal(const Rational& value);

// Nearest double.
double ToDouble(const Rational& value);

// Exact value of a finite double.
Rational FromDouble(double value);

// Accepts "p/q", integers and plain decimals ("0.25", "-3", "1e-2").
// Throws Error(kParse) on malformed text.
Rational ParseRational(std::string_view text);

// Fails with kOverflow if the value does not fit into two int64s.
void ToInt64Pair(const Rational& value, std::int64_t* num, std::int64_t* den);

}  // namespace deplen

#endif  // DEPLEN_RATIONAL_HPP_
