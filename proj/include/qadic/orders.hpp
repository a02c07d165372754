#pragma once

#include <optional>
#include <vector>

#include "qadic/natural.hpp"

namespace qadic {

/// ord_{p^k}(q) = p^(k - k0) * d_k0 for every k >= k0, where
/// q^d_k0 = 1 + b p^k0 and p does not divide b.
struct OrderStabilization {
  Natural p;
  Natural q;
  Natural k0;
  Natural d_k0;
  Natural b;

  friend bool operator==(const OrderStabilization&, const OrderStabilization&) = default;
};

/// Orbits of Z*_m under multiplication by q, each named by its least element.
struct CosetDecomposition {
  Natural modulus;
  Natural generator;
  std::vector<Natural> representatives;  // sorted
  Natural orbit_size;
};

/// Threshold for ord over products of prime powers.
struct ProductStabilization {
  /// The constant built from the stabilization thresholds and the exponent
  /// matrix r(i, j) of each threshold order; valid for all k_i >= n0.
  Natural n0;
  /// Smallest n >= 1 for which the identity held over the whole box
  /// [n, n0 + 1]^l. Equal to n0 unless a smaller threshold works there.
  Natural smallest_checked;
  std::vector<Natural> thresholds;  // k0 per prime
};

/// Least n >= 1 with a^n = 1 (mod m). Rejects gcd(a, m) != 1, naming the factor.
Natural mult_order(const Natural& a, const Natural& m);

/// p prime, gcd(p, q) = 1, q >= 2.
OrderStabilization order_stabilization(const Natural& p, const Natural& q);

/// ord_{p^k}(q) for k >= 1.
Natural order_of_prime_power(const Natural& p, const Natural& q, const Natural& k);

/// lcm(ord_m1(a), ord_m2(a)) for coprime m1, m2.
Natural order_lcm(const Natural& a, const Natural& m1, const Natural& m2);

/// Distinct primes, all coprime to q. The identity is checked for every
/// exponent tuple in {n0, n0 + 1}^l before returning.
ProductStabilization product_stabilization(const std::vector<Natural>& primes, const Natural& q);

/// Requires m to fit in 32 bits (one flag per residue).
CosetDecomposition coset_decomposition(const Natural& m, const Natural& q);

/// Least n >= 1 with q^n x = y (mod m), if x and y share an orbit.
std::optional<Natural> orbit_witness(const Natural& x, const Natural& y, const Natural& q,
                                     const Natural& m);

}  // namespace qadic
