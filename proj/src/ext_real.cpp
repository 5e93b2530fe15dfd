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

#include "areaform/ext_real.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstring>
#include <limits>
#include <system_error>

namespace areaform {

std::string_view to_string(Backend backend) {
  return backend == Backend::Rational ? "rational" : "float";
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Rational pow10(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(p);
  Rational r(mpz_class(1), p);
  r.canonicalize();
  return r;
}

Rational parse_decimal(std::string_view text) {
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    bool negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!is_digits(exp_text) || exp_text.size() > 4) {
      throw ArithmeticError("malformed exponent in numeric literal '" + std::string(text) + "'");
    }
    exponent = std::stol(std::string(exp_text));
    if (negative) exponent = -exponent;
  }
  std::string digits;
  auto dot = mantissa.find('.');
  if (dot == std::string_view::npos) {
    if (!is_digits(mantissa)) {
      throw ArithmeticError("malformed numeric literal '" + std::string(text) + "'");
    }
    digits = std::string(mantissa);
  } else {
    std::string_view whole = mantissa.substr(0, dot);
    std::string_view frac = mantissa.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !is_digits(whole)) ||
        (!frac.empty() && !is_digits(frac))) {
      throw ArithmeticError("malformed numeric literal '" + std::string(text) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  }
  Rational value(mpz_class(digits, 10));
  value *= pow10(exponent);
  value.canonicalize();
  return value;
}

unsigned long bit_length(const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

}  // namespace

ExtReal::ExtReal(int value) : value_(Rational(value)) {
  if (value < 0) throw ArithmeticError("ExtReal must be nonnegative");
}

ExtReal::ExtReal(Rational value) : value_(std::move(value)) {
  auto& q = std::get<Rational>(value_);
  q.canonicalize();
  if (sgn(q) < 0) throw ArithmeticError("ExtReal must be nonnegative, got " + q.get_str());
}

ExtReal::ExtReal(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  *this = ExtReal(std::move(q));
}

ExtReal ExtReal::from_double(double value) {
  if (std::isnan(value)) throw ArithmeticError("NaN is not an extended real");
  if (value < 0) throw ArithmeticError("ExtReal must be nonnegative, got " + format_17g(value));
  if (std::isinf(value)) return infinity();
  return ExtReal(Storage(value == 0.0 ? 0.0 : value));
}

ExtReal ExtReal::infinity() { return ExtReal(Storage(Infinite{})); }

ExtReal ExtReal::parse(std::string_view text, Backend backend) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text == "inf" || text == "+inf" || text == "infinity" || text == "Infinity") {
    return infinity();
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (!text.empty() && text.front() == '-') {
    throw ArithmeticError("negative value '" + std::string(text) + "' outside [0, +inf]");
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) {
      throw ArithmeticError("malformed rational literal '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ArithmeticError("zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else {
    value = parse_decimal(text);
  }
  ExtReal result(std::move(value));
  return backend == Backend::Float ? result.to_float() : result;
}

bool ExtReal::is_zero() const {
  if (auto q = std::get_if<Rational>(&value_)) return sgn(*q) == 0;
  if (auto d = std::get_if<double>(&value_)) return *d == 0.0;
  return false;
}

double ExtReal::to_double() const {
  if (auto q = std::get_if<Rational>(&value_)) return nearest_double(*q);
  if (auto d = std::get_if<double>(&value_)) return *d;
  return std::numeric_limits<double>::infinity();
}

const Rational& ExtReal::rational() const {
  if (auto q = std::get_if<Rational>(&value_)) return *q;
  throw ArithmeticError("value " + to_string() + " is not an exact finite rational");
}

ExtReal ExtReal::to_float() const {
  if (auto q = std::get_if<Rational>(&value_)) return from_double(nearest_double(*q));
  return *this;
}

ExtReal ExtReal::with_backend(Backend backend) const {
  return backend == Backend::Float ? to_float() : *this;
}

ExtReal& ExtReal::operator+=(const ExtReal& rhs) {
  if (is_infinite()) return *this;
  if (rhs.is_infinite()) return *this = infinity();
  auto* lq = std::get_if<Rational>(&value_);
  auto* rq = std::get_if<Rational>(&rhs.value_);
  if (lq && rq) {
    *lq += *rq;
    return *this;
  }
  return *this = from_double(to_double() + rhs.to_double());
}

ExtReal& ExtReal::operator*=(const ExtReal& rhs) {
  if (is_zero() || rhs.is_zero()) {
    // 0 * inf = 0; the product stays exact only when both factors are.
    return *this = (is_exact() && rhs.is_exact()) ? ExtReal() : from_double(0.0);
  }
  if (is_infinite() || rhs.is_infinite()) return *this = infinity();
  auto* lq = std::get_if<Rational>(&value_);
  auto* rq = std::get_if<Rational>(&rhs.value_);
  if (lq && rq) {
    *lq *= *rq;
    return *this;
  }
  return *this = from_double(to_double() * rhs.to_double());
}

ExtReal operator-(const ExtReal& lhs, const ExtReal& rhs) {
  if (rhs.is_infinite()) throw ArithmeticError("subtraction of +inf");
  if (lhs < rhs) {
    throw ArithmeticError("subtraction " + lhs.to_string() + " - " + rhs.to_string() + " leaves [0, +inf]");
  }
  if (lhs.is_infinite()) return lhs;
  auto* lq = std::get_if<Rational>(&lhs.value_);
  auto* rq = std::get_if<Rational>(&rhs.value_);
  if (lq && rq) return ExtReal(Rational(*lq - *rq));
  double d = lhs.to_double() - rhs.to_double();
  return ExtReal::from_double(d < 0 ? 0.0 : d);
}

ExtReal operator/(const ExtReal& lhs, const ExtReal& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("division by zero");
  if (rhs.is_infinite()) {
    if (lhs.is_infinite()) throw ArithmeticError("inf / inf is undefined");
    return ExtReal();
  }
  if (lhs.is_infinite()) return lhs;
  auto* lq = std::get_if<Rational>(&lhs.value_);
  auto* rq = std::get_if<Rational>(&rhs.value_);
  if (lq && rq) return ExtReal(Rational(*lq / *rq));
  return ExtReal::from_double(lhs.to_double() / rhs.to_double());
}

std::strong_ordering operator<=>(const ExtReal& lhs, const ExtReal& rhs) {
  bool li = lhs.is_infinite();
  bool ri = rhs.is_infinite();
  if (li || ri) return li == ri ? std::strong_ordering::equal : (li ? std::strong_ordering::greater : std::strong_ordering::less);
  auto* lq = std::get_if<Rational>(&lhs.value_);
  auto* rq = std::get_if<Rational>(&rhs.value_);
  int c;
  if (lq && rq) {
    c = cmp(*lq, *rq);
  } else if (lq) {
    c = cmp(*lq, Rational(std::get<double>(rhs.value_)));
  } else if (rq) {
    c = cmp(Rational(std::get<double>(lhs.value_)), *rq);
  } else {
    double a = std::get<double>(lhs.value_);
    double b = std::get<double>(rhs.value_);
    c = a < b ? -1 : (a > b ? 1 : 0);
  }
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExtReal::to_string() const {
  if (is_infinite()) return "inf";
  if (auto d = std::get_if<double>(&value_)) return format_17g(*d);
  const Rational& q = std::get<Rational>(value_);
  if (q.get_den() == 1) return q.get_num().get_str();
  mpz_class den = q.get_den();
  unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
  unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (den != 1) return q.get_num().get_str() + "/" + q.get_den().get_str();
  unsigned long places = std::max(twos, fives);
  Rational scaled = q * pow10(static_cast<long>(places));
  std::string digits = scaled.get_num().get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return digits;
}

ExtReal abs_diff(const ExtReal& a, const ExtReal& b) { return a < b ? b - a : a - b; }
ExtReal min(const ExtReal& a, const ExtReal& b) { return b < a ? b : a; }
ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

ExtReal pow(const ExtReal& base, const ExtReal& exponent) {
  if (exponent.is_infinite() || exponent.is_zero()) {
    throw ArithmeticError("exponent must be finite and positive, got " + exponent.to_string());
  }
  if (base.is_infinite()) return base;
  if (base.is_zero()) return base.is_exact() && exponent.is_exact() ? ExtReal() : ExtReal::from_double(0.0);
  if (base.is_exact() && exponent.is_exact()) {
    const Rational& b = base.rational();
    const Rational& e = exponent.rational();
    if (e.get_num().fits_ulong_p() && e.get_den().fits_ulong_p()) {
      unsigned long p = e.get_num().get_ui();
      unsigned long q = e.get_den().get_ui();
      mpz_class root_num;
      mpz_class root_den;
      bool exact = mpz_root(root_num.get_mpz_t(), b.get_num().get_mpz_t(), q) != 0 &&
                   mpz_root(root_den.get_mpz_t(), b.get_den().get_mpz_t(), q) != 0;
      constexpr unsigned long kMaxBits = 1UL << 14;
      if (exact && bit_length(root_num) * p <= kMaxBits && bit_length(root_den) * p <= kMaxBits) {
        mpz_class num;
        mpz_class den;
        mpz_pow_ui(num.get_mpz_t(), root_num.get_mpz_t(), p);
        mpz_pow_ui(den.get_mpz_t(), root_den.get_mpz_t(), p);
        return ExtReal(Rational(num, den));
      }
    }
  }
  return ExtReal::from_double(std::pow(base.to_double(), exponent.to_double()));
}

double nearest_double(const Rational& q) {
  double lo = mpq_get_d(q.get_mpq_t());  // truncates toward zero
  if (std::isinf(lo)) return lo;
  if (Rational(lo) == q) return lo;
  double hi = std::nextafter(lo, sgn(q) >= 0 ? std::numeric_limits<double>::infinity()
                                             : -std::numeric_limits<double>::infinity());
  if (std::isinf(hi)) return lo;
  Rational d_lo = abs(q - Rational(lo));
  Rational d_hi = abs(Rational(hi) - q);
  int c = cmp(d_lo, d_hi);
  if (c != 0) return c < 0 ? lo : hi;
  std::int64_t bits;
  std::memcpy(&bits, &lo, sizeof bits);
  return (bits & 1) == 0 ? lo : hi;
}

std::string shortest_repr(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

std::string format_17g(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), end);
}

}  // namespace areaform
