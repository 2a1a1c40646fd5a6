// Copyright 2026 The groupcert Authors
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

// Exact rational numbers backed by GMP. Every quantity that reaches a verdict
// is a Rational; there is no floating point on any decision path.

#ifndef GROUPCERT_RATIONAL_H_
#define GROUPCERT_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace groupcert {

class Rational {
 public:
  Rational() = default;
  Rational(int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(int64_t num, int64_t den);
  explicit Rational(mpq_class value);

  // Parses "-?digits(/digits)?" with a nonzero denominator. Throws
  // std::invalid_argument on anything else.
  static Rational Parse(std::string_view text);

  // Canonical "p/q" or "p" (lowest terms, positive denominator).
  std::string ToString() const;

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational Floor() const;
  Rational Abs() const { return Rational(mpq_class(abs(value_))); }
  // Representative in [0, 1).
  Rational FractionalPart() const { return *this - Floor(); }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.value_ != b.value_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.value_ > b.value_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.value_ >= b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  mpq_class value_;
};

Rational Min(const Rational& a, const Rational& b);
Rational Max(const Rational& a, const Rational& b);

// Least common multiple of the denominators seen so far.
class DenominatorLcm {
 public:
  void Add(const Rational& r);
  const mpz_class& value() const { return lcm_; }

 private:
  mpz_class lcm_ = 1;
};

}  // namespace groupcert

template <>
struct std::hash<groupcert::Rational> {
  size_t operator()(const groupcert::Rational& r) const;
};

#endif  // GROUPCERT_RATIONAL_H_
