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

#include "deplen/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "deplen/error.hpp"

namespace deplen {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kCycle: return "CycleError";
    case ErrorCode::kMultiRoot: return "MultiRootError";
    case ErrorCode::kDisconnected: return "DisconnectedError";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kDomain: return "DomainError";
    case ErrorCode::kNonMonotone: return "NonMonotoneError";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInfeasibleConstraints: return "InfeasibleConstraints";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kRange: return "RangeError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "UnknownError";
}

std::string ToFractionString(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string FormatDecimal(const Rational& value) {
  constexpr int kDigits = 6;
  BigInt scale = 1;
  for (int i = 0; i < kDigits; ++i) scale *= 10;
  const Rational scaled = value * Rational(scale);
  const bool negative = scaled < 0;
  const Rational magnitude = negative ? Rational(-scaled) : scaled;
  // Round half away from zero.
  BigInt units = numerator(magnitude) / denominator(magnitude);
  if (denominator(magnitude) != 1) {
    const Rational rest = magnitude - Rational(units);
    if (rest * 2 >= 1) units += 1;
  }
  std::string digits = units.str();
  if (digits.size() <= kDigits) digits.insert(0, kDigits + 1 - digits.size(), '0');
  std::string int_part = digits.substr(0, digits.size() - kDigits);
  std::string frac = digits.substr(digits.size() - kDigits);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (negative && units != 0) ? "-" : "";
  out += int_part;
  if (!frac.empty()) out += "." + frac;
  return out;
}

double ToDouble(const Rational& value) {
  return value.convert_to<double>();
}

Rational FromDouble(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kDomain, "non-finite value has no exact rational");
  }
  if (value == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  // mantissa * 2^53 is an exact integer for every finite double.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational result{BigInt(scaled)};
  if (exponent > 0) {
    result *= Rational(BigInt(1) << exponent);
  } else if (exponent < 0) {
    result /= Rational(BigInt(1) << -exponent);
  }
  return result;
}

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt ParseInteger(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) {
    throw ParseError(0, "malformed number '" + std::string(whole) + "'");
  }
  // A leading 0 would select octal.
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  BigInt value{std::string(s)};
  return negative ? BigInt(-value) : value;
}

BigInt Pow10(int exponent) {
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) result *= 10;
  return result;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const std::string_view whole = text;
  if (text.empty()) throw ParseError(0, "empty number");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = ParseInteger(text.substr(0, slash), whole);
    const BigInt den = ParseInteger(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError(0, "zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
  }

  int exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const BigInt exp_value = ParseInteger(text.substr(e + 1), whole);
    if (exp_value > 4000 || exp_value < -4000) {
      throw ParseError(0, "exponent out of range in '" + std::string(whole) + "'");
    }
    exponent = exp_value.convert_to<int>();
    text = text.substr(0, e);
  }

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !AllDigits(int_part)) ||
        (!frac_part.empty() && !AllDigits(frac_part))) {
      throw ParseError(0, "malformed number '" + std::string(whole) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<int>(frac_part.size());
  } else {
    if (!AllDigits(text)) {
      throw ParseError(0, "malformed number '" + std::string(whole) + "'");
    }
    digits = std::string(text);
  }
  Rational value{ParseInteger(digits, whole)};
  if (exponent > 0) value *= Rational(Pow10(exponent));
  if (exponent < 0) value /= Rational(Pow10(-exponent));
  return negative ? Rational(-value) : value;
}

void ToInt64Pair(const Rational& value, std::int64_t* num, std::int64_t* den) {
  const BigInt& n = numerator(value);
  const BigInt& d = denominator(value);
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
  if (n > kMax || n < kMin || d > kMax) {
    throw Error(ErrorCode::kOverflow,
                "rational " + ToFractionString(value) + " does not fit in int64");
  }
  *num = n.convert_to<std::int64_t>();
  *den = d.convert_to<std::int64_t>();
}

}  // namespace deplen
