#include "qadic/rational.hpp"

#include <ostream>

#include "qadic/number_theory.hpp"

namespace qadic {

Rational::Rational(Natural num, Natural den) {
  if (den.is_zero()) throw PreconditionError("rational with zero denominator");
  const Natural g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Natural::parse(text));
  if (text.find('/', slash + 1) != std::string_view::npos) {
    throw PreconditionError("malformed rational '" + std::string(text) + "'");
  }
  try {
    return Rational(Natural::parse(text.substr(0, slash)), Natural::parse(text.substr(slash + 1)));
  } catch (const PreconditionError&) {
    throw PreconditionError("malformed rational '" + std::string(text) + "'");
  }
}

std::string Rational::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

Rational& Rational::operator+=(const Rational& rhs) {
  *this = Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  const Natural a = num_ * rhs.den_;
  const Natural b = rhs.num_ * den_;
  if (a < b) throw PreconditionError("rational subtraction underflow");
  *this = Rational(a - b, den_ * rhs.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = Rational(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw PreconditionError("division by zero");
  *this = Rational(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

Rational pow(const Rational& x, std::uint64_t e) {
  return Rational(Natural::pow(x.num(), e), Natural::pow(x.den(), e));
}

}  // namespace qadic
