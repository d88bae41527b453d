// Copyright 2026 The translit-norm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRANSLIT_RATIONAL_H_
#define TRANSLIT_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string_view>

namespace translit {

// Exact fraction with a positive denominator, always kept in lowest terms.
// Scores and thresholds are small, so 64-bit parts with 128-bit cross
// products never overflow in practice.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT
  constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    Reduce();
  }

  // Parses a plain decimal such as "0.60", "1", ".25" or "-0.5" exactly.
  // Throws InvalidConfig on anything else.
  static Rational ParseDecimal(std::string_view text);

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  double ToDouble() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend constexpr Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend constexpr Rational operator/(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(const Rational& a,
                                                    const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  constexpr void Reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace translit

#endif  // TRANSLIT_RATIONAL_H_
