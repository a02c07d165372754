#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "qadic/errors.hpp"

namespace qadic {

/// Arbitrary-precision nonnegative integer.
///
/// Arithmetic is exact. Subtraction that would go below zero and division by
/// zero throw PreconditionError instead of wrapping.
class Natural {
 public:
  Natural() = default;

  template <std::integral I>
  Natural(I v) {  // NOLINT(google-explicit-constructor): literals read naturally
    if constexpr (std::is_signed_v<I>) {
      if (v < 0) throw PreconditionError("negative value for a natural number");
      value_ = static_cast<unsigned long>(v);
    } else {
      value_ = static_cast<unsigned long>(v);
    }
  }

  explicit Natural(mpz_class v);

  /// Parses a plain decimal string ("0", "12345"). No sign, no whitespace.
  static Natural parse(std::string_view text);

  static Natural pow(const Natural& base, std::uint64_t exponent);

  const mpz_class& mpz() const { return value_; }
  mpz_srcptr get_mpz_t() const { return value_.get_mpz_t(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_even() const { return mpz_even_p(value_.get_mpz_t()) != 0; }
  bool fits_u64() const { return mpz_fits_ulong_p(value_.get_mpz_t()) != 0; }
  std::uint64_t to_u64() const;
  std::size_t bit_length() const;
  std::string to_string() const { return value_.get_str(10); }

  Natural& operator+=(const Natural& rhs);
  Natural& operator-=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  Natural& operator/=(const Natural& rhs);
  Natural& operator%=(const Natural& rhs);
  Natural& operator++();

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
  friend Natural operator/(Natural lhs, const Natural& rhs) { return lhs /= rhs; }
  friend Natural operator%(Natural lhs, const Natural& rhs) { return lhs %= rhs; }

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const Natural& n);

/// True iff d divides n. d = 0 divides only 0.
bool divides(const Natural& d, const Natural& n);

}  // namespace qadic
