// Copyright 2026 The areaform Authors
//
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

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace areaform {

using Rational = mpq_class;

/// Arithmetic backend that produced a value or a verdict.
enum class Backend { Rational, Float };

std::string_view to_string(Backend backend);

/// Raised on arithmetic that leaves [0, +inf] (negative results, inf - inf,
/// division by zero) and on malformed numeric literals.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value in [0, +inf].
///
/// Finite values are either exact rationals or IEEE doubles. Operations on two
/// exact operands stay exact; any double operand makes the result a double,
/// correctly rounded. Comparisons are exact across kinds. Products use the
/// measure-theoretic convention 0 * inf = 0.
class ExtReal {
 public:
  ExtReal() : value_(Rational(0)) {}
  ExtReal(int value);  // NOLINT(google-explicit-constructor)
  explicit ExtReal(Rational value);
  ExtReal(std::int64_t num, std::int64_t den);

  static ExtReal from_double(double value);
  static ExtReal infinity();

  /// Parses "inf", an integer, a decimal literal (with optional exponent) or
  /// "p/q". Literals are read exactly; `backend == Float` rounds to double.
  static ExtReal parse(std::string_view text, Backend backend = Backend::Rational);

  bool is_infinite() const { return std::holds_alternative<Infinite>(value_); }
  bool is_finite() const { return !is_infinite(); }
  /// True for exact rationals and for +inf.
  bool is_exact() const { return !std::holds_alternative<double>(value_); }
  bool is_zero() const;

  double to_double() const;
  /// Requires an exact finite value.
  const Rational& rational() const;

  /// Same value, float kind (no-op for +inf).
  ExtReal to_float() const;
  ExtReal with_backend(Backend backend) const;

  ExtReal& operator+=(const ExtReal& rhs);
  ExtReal& operator*=(const ExtReal& rhs);

  friend ExtReal operator+(ExtReal lhs, const ExtReal& rhs) { return lhs += rhs; }
  friend ExtReal operator*(ExtReal lhs, const ExtReal& rhs) { return lhs *= rhs; }
  /// Requires lhs >= rhs and rhs finite.
  friend ExtReal operator-(const ExtReal& lhs, const ExtReal& rhs);
  /// Requires rhs nonzero; inf / finite = inf, finite / inf = 0, inf / inf throws.
  friend ExtReal operator/(const ExtReal& lhs, const ExtReal& rhs);

  friend std::strong_ordering operator<=>(const ExtReal& lhs, const ExtReal& rhs);
  friend bool operator==(const ExtReal& lhs, const ExtReal& rhs) {
    return (lhs <=> rhs) == std::strong_ordering::equal;
  }

  /// "inf", an exact decimal when the rational terminates, "p/q" otherwise;
  /// doubles use 17 significant digits.
  std::string to_string() const;

 private:
  struct Infinite {};
  using Storage = std::variant<Rational, double, Infinite>;
  explicit ExtReal(Storage value) : value_(std::move(value)) {}

  Storage value_;
};

ExtReal abs_diff(const ExtReal& a, const ExtReal& b);
ExtReal min(const ExtReal& a, const ExtReal& b);
ExtReal max(const ExtReal& a, const ExtReal& b);

/// base^exponent for finite exponent > 0. Exact when both are exact and the
/// result is rational (small enough to materialize); a double otherwise.
ExtReal pow(const ExtReal& base, const ExtReal& exponent);

/// Correctly rounded conversion of a rational to the nearest double.
double nearest_double(const Rational& q);

/// Shortest decimal text that round-trips `value`.
std::string shortest_repr(double value);

/// Decimal text with 17 significant digits, locale independent.
std::string format_17g(double value);

}  // namespace areaform
