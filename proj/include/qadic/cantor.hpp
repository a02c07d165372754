#pragma once

#include <cstdint>
#include <vector>

#include "qadic/expansion.hpp"
#include "qadic/rational.hpp"

namespace qadic {

/// K(q, A): points of [0, 1] with some q-adic expansion whose digits all lie
/// in A. Requires q >= 3 and 1 < #A < q.
class DigitCantorSet {
 public:
  DigitCantorSet(std::uint64_t q, std::vector<Digit> digits);

  std::uint64_t base() const { return q_; }
  const std::vector<Digit>& digits() const { return digits_; }
  bool has_digit(Digit d) const;
  Digit min_digit() const { return digits_.front(); }
  Digit max_digit() const { return digits_.back(); }

  friend bool operator==(const DigitCantorSet&, const DigitCantorSet&) = default;

 private:
  std::uint64_t q_;
  std::vector<Digit> digits_;  // sorted, distinct
};

/// An open interval (left, right) inside [0, 1].
struct Gap {
  Rational left;
  Rational right;

  Rational length() const { return right - left; }
  bool contains(const Rational& x) const { return left < x && x < right; }

  friend bool operator==(const Gap&, const Gap&) = default;
};

/// Value of min(A)^infinity.
Rational min_point(const DigitCantorSet& k);
/// Value of max(A)^infinity.
Rational max_point(const DigitCantorSet& k);

/// Largest connected component of (0,1) \ K. Only the boundary gaps and the
/// level-one gaps between consecutive digit cylinders can be largest; deeper
/// gaps are copies shrunk by powers of 1/q. Ties go to the leftmost gap.
Gap largest_gap(const DigitCantorSet& k);

/// Exact membership for x in [0, 1].
bool contains(const DigitCantorSet& k, const Rational& x);

/// True iff q^n x mod 1 lies in the open largest gap, which proves x is not
/// in K. x in [0, 1).
bool shift_into_gap_implies_exclusion(const DigitCantorSet& k, const Rational& x, const Natural& n);

/// q^n x mod 1, exactly.
Rational shift(const Rational& x, std::uint64_t q, const Natural& n);

}  // namespace qadic
