// SPDX-License-Identifier: BSD-3-Clause

#ifndef SUBPEL_RATIONAL_HPP_
#define SUBPEL_RATIONAL_HPP_

#include <cstdint>
#include <numeric>
#include <string>

namespace subpel {

// Exact rational on 64-bit integers, always reduced, denominator > 0.
// Complexity figures and measured MAC rates are kept in this form so
// grid comparisons never go through floating point.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
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

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_integer() const { return den_ == 1; }

  constexpr double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Display rounding used for integer-style tables; exact values stay rational.
  constexpr std::int64_t rounded_half_up() const {
    std::int64_t q = (2 * num_ + den_) / (2 * den_);
    if (2 * num_ + den_ < 0 && (2 * num_ + den_) % (2 * den_) != 0) {
      --q;  // floor semantics for negatives
    }
    return q;
  }

  std::string str() const {
    if (is_integer()) {
      return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
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
  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend constexpr bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend constexpr bool operator>(const Rational& a, const Rational& b) { return b < a; }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace subpel

#endif  // SUBPEL_RATIONAL_HPP_
