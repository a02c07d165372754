#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qadic/natural.hpp"

namespace qadic {

struct PrimePower {
  Natural prime;
  std::uint64_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization: primes strictly increasing, exponents >= 1.
using Factorization = std::vector<PrimePower>;

Natural gcd(const Natural& a, const Natural& b);

/// Rejects zero arguments.
Natural lcm(const Natural& a, const Natural& b);

/// a^e mod m; cost is logarithmic in e. m = 0 is rejected.
Natural mod_pow(const Natural& a, const Natural& e, const Natural& m);

/// Inverse of a modulo m, if gcd(a, m) = 1. For m = 1 the inverse is 0.
std::optional<Natural> mod_inverse(const Natural& a, const Natural& m);

/// Deterministic below 3.3e24; BPSW-backed above.
bool is_prime(const Natural& n);

/// Exact factorization. Trial division by primes below 10^6, then Brent's
/// variant of Pollard rho for the cofactor. Practical for inputs whose second
/// largest prime factor stays near 120 bits or below.
Factorization factorize(const Natural& n);

/// Reconstructs the product of a factorization.
Natural expand_factorization(const Factorization& f);

/// Euler's totient through n * prod(1 - 1/p).
Natural euler_phi(const Natural& n);
Natural euler_phi(const Factorization& f);

/// Number of times p divides n (p >= 2, n >= 1), and the cofactor.
struct Valuation {
  std::uint64_t exponent = 0;
  Natural cofactor;
};
Valuation valuation(const Natural& n, const Natural& p);

/// t = t_hat * u with gcd(t_hat, q) = 1, u | q^v and v minimal.
struct CoprimeSplit {
  Natural t_hat;
  Natural u;
  std::uint64_t v = 0;

  friend bool operator==(const CoprimeSplit&, const CoprimeSplit&) = default;
};
CoprimeSplit split_coprime_part(const Natural& t, const Natural& q);

/// Writes n = root^exponent with exponent maximal (so root is not a perfect
/// power). n >= 2.
struct PerfectPower {
  Natural root;
  std::uint64_t exponent = 1;
};
PerfectPower perfect_power(const Natural& n);

}  // namespace qadic
