#include "qadic/expansion.hpp"

#include "qadic/number_theory.hpp"

namespace qadic {
namespace {

void require_base(std::uint64_t q) {
  if (q < 2) throw PreconditionError("radix q must be at least 2");
}

void require_unit_interval(const Rational& x) {
  if (x >= Rational(1)) {
    throw PreconditionError("expansion domain is [0,1); got " + x.to_string());
  }
}

// Digits [first, last) read as one base-q integer. Splitting in halves keeps
// long periods near-linear instead of quadratic.
mpz_class block_value(std::vector<Digit>::const_iterator first, std::vector<Digit>::const_iterator last,
                      std::uint64_t q) {
  const auto n = last - first;
  if (n <= 64) {
    mpz_class v = 0;
    for (auto it = first; it != last; ++it) {
      v *= q;
      v += *it;
    }
    return v;
  }
  const auto mid = first + n / 2;
  mpz_class shift;
  mpz_ui_pow_ui(shift.get_mpz_t(), q, static_cast<unsigned long>(last - mid));
  return block_value(first, mid, q) * shift + block_value(mid, last, q);
}

}  // namespace

DigitWalker::DigitWalker(const Rational& x, std::uint64_t q)
    : numerator_(x.num().mpz()), denominator_(x.den().mpz()), base_(q) {
  require_base(q);
  require_unit_interval(x);
  preperiod_length_ = split_coprime_part(x.den(), q).v;
}

bool DigitWalker::walk(const std::function<bool(Digit)>& visit) const {
  mpz_class r = numerator_;
  mpz_class scaled, digit;
  auto step = [&]() -> Digit {
    mpz_mul_ui(scaled.get_mpz_t(), r.get_mpz_t(), base_);
    mpz_fdiv_qr(digit.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), denominator_.get_mpz_t());
    return digit.get_ui();
  };
  for (std::uint64_t i = 0; i < preperiod_length_; ++i) {
    if (!visit(step())) return false;
  }
  const mpz_class cycle_start = r;
  do {
    if (!visit(step())) return false;
  } while (r != cycle_start);
  return true;
}

ExpansionQ expand(const Rational& x, std::uint64_t q) {
  const DigitWalker walker(x, q);
  std::vector<Digit> digits;
  walker.walk([&](Digit d) {
    digits.push_back(d);
    return true;
  });
  ExpansionQ out;
  out.base = q;
  const auto v = static_cast<std::ptrdiff_t>(walker.preperiod_length());
  out.preperiod.assign(digits.begin(), digits.begin() + v);
  out.period.assign(digits.begin() + v, digits.end());
  return out;
}

Rational evaluate(const ExpansionQ& e) {
  require_base(e.base);
  if (e.period.empty()) throw PreconditionError("expansion with empty period");
  const Natural q = e.base;
  const Natural pre(block_value(e.preperiod.begin(), e.preperiod.end(), e.base));
  const Natural per(block_value(e.period.begin(), e.period.end(), e.base));
  const Natural scale = Natural::pow(q, e.preperiod.size());
  const Natural cycle = Natural::pow(q, e.period.size()) - 1;
  // pre / q^v + per / (q^v (q^L - 1))
  return Rational(pre * cycle + per, scale * cycle);
}

Digit digit_at(const Rational& x, std::uint64_t q, const Natural& i) {
  require_base(q);
  require_unit_interval(x);
  if (i.is_zero()) throw PreconditionError("digit positions start at 1");
  const Natural r = x.num() * mod_pow(q, i - 1, x.den()) % x.den();
  return (r * q / x.den()).to_u64();
}

bool is_finite_expansion(const Rational& x, const Natural& p) {
  if (p < 2) throw PreconditionError("radix p must be at least 2");
  if (x > Rational(1)) throw PreconditionError("is_finite_expansion expects x in [0,1]");
  return split_coprime_part(x.den(), p).t_hat.is_one();
}

std::set<Digit> digit_set(const Rational& x, std::uint64_t q) {
  std::set<Digit> seen;
  DigitWalker(x, q).walk([&](Digit d) {
    seen.insert(d);
    return seen.size() < q;
  });
  return seen;
}

std::set<std::vector<Digit>> blocks_present(const Rational& x, std::uint64_t q, std::uint64_t m) {
  if (m == 0) throw PreconditionError("block length must be at least 1");
  const ExpansionQ e = expand(x, q);
  // Windows starting in the preperiod or the first period cover every phase.
  std::vector<Digit> digits = e.preperiod;
  const std::size_t starts = e.preperiod.size() + e.period.size();
  while (digits.size() < starts + m - 1) {
    digits.insert(digits.end(), e.period.begin(), e.period.end());
  }
  std::set<std::vector<Digit>> out;
  for (std::size_t i = 0; i < starts; ++i) {
    out.emplace(digits.begin() + static_cast<std::ptrdiff_t>(i),
                digits.begin() + static_cast<std::ptrdiff_t>(i + m));
  }
  return out;
}

std::optional<ExpansionQ> alternate_expansion(const Rational& x, std::uint64_t q) {
  require_base(q);
  require_unit_interval(x);
  if (x.is_zero() || !is_finite_expansion(x, q)) return std::nullopt;
  ExpansionQ e = expand(x, q);
  // Minimal preperiod of a terminating expansion ends in a nonzero digit.
  e.preperiod.back() -= 1;
  e.period = {q - 1};
  return e;
}

}  // namespace qadic
