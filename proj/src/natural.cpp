#include "qadic/natural.hpp"

#include <ostream>

namespace qadic {

Natural::Natural(mpz_class v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw PreconditionError("negative value for a natural number");
}

Natural Natural::parse(std::string_view text) {
  if (text.empty()) throw PreconditionError("empty natural number");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw PreconditionError("malformed natural number '" + std::string(text) + "'");
    }
  }
  return Natural(mpz_class(std::string(text), 10));
}

Natural Natural::pow(const Natural& base, std::uint64_t exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.value_.get_mpz_t(), exponent);
  return Natural(std::move(out));
}

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw PreconditionError("value " + to_string() + " exceeds 64 bits");
  return value_.get_ui();
}

std::size_t Natural::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (value_ < rhs.value_) throw PreconditionError("natural subtraction underflow");
  value_ -= rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Natural& Natural::operator/=(const Natural& rhs) {
  if (rhs.is_zero()) throw PreconditionError("division by zero");
  mpz_fdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Natural& Natural::operator%=(const Natural& rhs) {
  if (rhs.is_zero()) throw PreconditionError("division by zero");
  mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Natural& Natural::operator++() {
  value_ += 1;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_string(); }

bool divides(const Natural& d, const Natural& n) {
  if (d.is_zero()) return n.is_zero();
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace qadic
