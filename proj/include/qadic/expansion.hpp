#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "qadic/rational.hpp"

namespace qadic {

using Digit = std::uint64_t;

/// Eventually periodic q-adic digit string 0.(preperiod)(period)(period)...
///
/// Terminating expansions carry period [0]. The canonical (greedy) form never
/// has period [q-1]; that form is produced only by alternate_expansion.
struct ExpansionQ {
  std::uint64_t base = 10;
  std::vector<Digit> preperiod;
  std::vector<Digit> period{0};

  friend bool operator==(const ExpansionQ&, const ExpansionQ&) = default;
};

/// Greedy digits of x in [0, 1) by long division. The walk knows the preperiod
/// length up front (from the coprime split of the denominator), so the period
/// is recognised when the remainder returns to its value after the preperiod;
/// no remainder history is stored.
class DigitWalker {
 public:
  DigitWalker(const Rational& x, std::uint64_t q);

  /// Preperiod length v.
  std::uint64_t preperiod_length() const { return preperiod_length_; }

  /// Emits digits d_1, d_2, ... until the first full period has been produced
  /// or visit returns false. Returns true iff the whole cycle was walked.
  bool walk(const std::function<bool(Digit)>& visit) const;

 private:
  mpz_class numerator_;
  mpz_class denominator_;
  std::uint64_t base_;
  std::uint64_t preperiod_length_;
};

/// Canonical expansion with minimal preperiod and period. x in [0, 1).
ExpansionQ expand(const Rational& x, std::uint64_t q);

/// Exact value of a (possibly non-canonical) expansion.
Rational evaluate(const ExpansionQ& e);

/// d_i of the canonical expansion (i >= 1), straight from q^(i-1) x mod 1.
Digit digit_at(const Rational& x, std::uint64_t q, const Natural& i);

/// True iff den(x) divides some power of p. Accepts x in [0, 1].
bool is_finite_expansion(const Rational& x, const Natural& p);

/// Digits occurring anywhere in the canonical expansion. The walk stops as soon
/// as every digit 0..q-1 has been seen, so long periods are cheap in practice.
std::set<Digit> digit_set(const Rational& x, std::uint64_t q);

/// All length-m windows of the infinite canonical digit string.
std::set<std::vector<Digit>> blocks_present(const Rational& x, std::uint64_t q, std::uint64_t m);

/// The trailing-(q-1) representation of a terminating x in (0, 1); nothing for
/// non-terminating x.
std::optional<ExpansionQ> alternate_expansion(const Rational& x, std::uint64_t q);

}  // namespace qadic
