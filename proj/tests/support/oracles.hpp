#pragma once

// Slow, independent reference implementations. None of these call into the
// qadic library, so agreement with it is meaningful.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using u64 = std::uint64_t;

u64 gcd(u64 a, u64 b);
u64 pow_mod(u64 a, u64 e, u64 m);

/// #{1 <= k <= n : gcd(k, n) = 1}
u64 totient_by_count(u64 n);

/// phi(0..limit) by the multiplicative sieve phi(j) -= phi(j) / p.
std::vector<u64> totients_by_sieve(u64 limit);

/// Least n >= 1 with a^n = 1 (mod m) by repeated multiplication.
u64 order_by_iteration(u64 a, u64 m);

/// Least divisor d of the group order with a^d = 1 (mod m), divisors scanned in
/// increasing order. For moduli too large to iterate.
u64 order_by_divisor_scan(u64 a, u64 m);

struct Digits {
  std::vector<u64> preperiod;
  std::vector<u64> period;
};

/// Long division of s/t (< 1) in base q, stopping at the first repeated
/// remainder.
Digits long_division(const mpz_class& s, const mpz_class& t, u64 q);

/// Searches for a digit string over A whose value is s/t (0 <= s <= t). The
/// remainder after each digit must stay inside [min A, max A] / (q - 1); a
/// repeated remainder on the current path closes an infinite admissible
/// string. Returns nothing if the path budget is exhausted.
std::optional<bool> member_by_digit_search(const mpz_class& s, const mpz_class& t, u64 q,
                                           const std::vector<u64>& digits, u64 max_depth = 4000);

/// Exact value of 0.(pre)(per)(per)... as a reduced fraction.
mpq_class value_of(const std::vector<u64>& preperiod, const std::vector<u64>& period, u64 q);

/// Deterministic generator for property tests.
inline std::mt19937_64 rng(u64 seed) { return std::mt19937_64(seed); }

inline u64 uniform(std::mt19937_64& g, u64 lo, u64 hi) {
  return std::uniform_int_distribution<u64>(lo, hi)(g);
}

}  // namespace oracle
