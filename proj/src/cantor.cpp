#include "qadic/cantor.hpp"

#include <algorithm>

#include "qadic/number_theory.hpp"

namespace qadic {

DigitCantorSet::DigitCantorSet(std::uint64_t q, std::vector<Digit> digits)
    : q_(q), digits_(std::move(digits)) {
  if (q_ < 3) throw PreconditionError("K(q,A) requires q >= 3");
  std::sort(digits_.begin(), digits_.end());
  if (std::adjacent_find(digits_.begin(), digits_.end()) != digits_.end()) {
    throw PreconditionError("digit set contains a repeated digit");
  }
  if (!digits_.empty() && digits_.back() >= q_) {
    throw PreconditionError("digit " + std::to_string(digits_.back()) + " out of range for q = " +
                            std::to_string(q_));
  }
  if (digits_.size() < 2 || digits_.size() >= q_) {
    throw PreconditionError("K(q,A) requires 1 < #A < q");
  }
}

bool DigitCantorSet::has_digit(Digit d) const {
  return std::binary_search(digits_.begin(), digits_.end(), d);
}

Rational min_point(const DigitCantorSet& k) { return Rational(k.min_digit(), k.base() - 1); }

Rational max_point(const DigitCantorSet& k) { return Rational(k.max_digit(), k.base() - 1); }

Gap largest_gap(const DigitCantorSet& k) {
  const Rational lo = min_point(k);
  const Rational hi = max_point(k);
  const Rational q = k.base();

  std::vector<Gap> candidates;
  if (k.min_digit() > 0) candidates.push_back({Rational(0), lo});
  const auto& a = k.digits();
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    Rational left = (Rational(a[i]) + hi) / q;
    Rational right = (Rational(a[i + 1]) + lo) / q;
    if (left < right) candidates.push_back({std::move(left), std::move(right)});
  }
  if (k.max_digit() < k.base() - 1) candidates.push_back({hi, Rational(1)});

  if (candidates.empty()) throw InternalError("K(q,A) with #A < q must have a gap");
  // Candidates are already ordered left to right.
  const Gap* best = &candidates.front();
  for (const Gap& g : candidates) {
    if (g.length() > best->length()) best = &g;
  }
  return *best;
}

bool contains(const DigitCantorSet& k, const Rational& x) {
  if (x > Rational(1)) throw PreconditionError("membership is defined on [0,1]; got " + x.to_string());
  if (x.is_zero()) return k.has_digit(0);
  if (x == Rational(1)) return k.has_digit(k.base() - 1);

  const auto in_a = [&](Digit d) { return k.has_digit(d); };
  if (DigitWalker(x, k.base()).walk(in_a)) return true;
  if (const auto alt = alternate_expansion(x, k.base())) {
    return std::all_of(alt->preperiod.begin(), alt->preperiod.end(), in_a) &&
           std::all_of(alt->period.begin(), alt->period.end(), in_a);
  }
  return false;
}

Rational shift(const Rational& x, std::uint64_t q, const Natural& n) {
  return Rational(x.num() * mod_pow(q, n, x.den()) % x.den(), x.den());
}

bool shift_into_gap_implies_exclusion(const DigitCantorSet& k, const Rational& x, const Natural& n) {
  if (x >= Rational(1)) throw PreconditionError("shift expects x in [0,1)");
  return largest_gap(k).contains(shift(x, k.base(), n));
}

}  // namespace qadic
