#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qadic/natural.hpp"

namespace qadic {

/// Exact nonnegative fraction, always held in lowest terms with den >= 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Natural num) : num_(std::move(num)), den_(1) {}  // NOLINT: integers are rationals
  template <std::integral I>
  Rational(I v) : Rational(Natural(v)) {}  // NOLINT
  Rational(Natural num, Natural den);

  /// Parses "s/t" or a bare natural "s". Throws PreconditionError on anything
  /// else, including negative values and a zero denominator.
  static Rational parse(std::string_view text);

  const Natural& num() const { return num_; }
  const Natural& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }

  Natural floor() const { return num_ / den_; }
  /// Fractional part x mod 1, in [0, 1).
  Rational frac() const { return Rational(num_ % den_, den_); }

  /// "num/den", also for integers ("3/1", "0/1").
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  Natural num_;
  Natural den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// x^e for a machine-word exponent.
Rational pow(const Rational& x, std::uint64_t e);

}  // namespace qadic
