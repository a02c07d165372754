#pragma once

#include <cstdint>
#include <vector>

#include "qadic/cantor.hpp"
#include "qadic/natural.hpp"
#include "qadic/rational.hpp"

namespace qadic {

/// q^exponent_n = 1 + b t P(k) (mod t P(k + h)), where P(k) = prod p_j^k_j.
struct CongruenceWitness {
  Natural q;
  Natural t;
  std::vector<Natural> primes;
  std::uint64_t h = 1;
  Natural b;
  std::uint64_t k0 = 0;
  Natural exponent_n;
  std::vector<std::uint64_t> k_tuple;

  friend bool operator==(const CongruenceWitness&, const CongruenceWitness&) = default;
};

/// The tuple-independent part of the witness construction. With
/// n0 = phi(t (prod p)^(h+1)), the exponent n0 * prod p works at the base
/// tuple (r_j + 1); each unit step in k_i multiplies the exponent by p_i.
struct WitnessSeed {
  Natural q;
  Natural t;
  std::vector<Natural> primes;
  std::uint64_t h = 1;
  Natural totient;                          // n0
  std::vector<std::uint64_t> base_exponents;  // r_j + 1
  Natural b;
  std::uint64_t k0 = 0;                     // max_j (r_j + 1)
};

/// Preconditions: q >= 2, t >= 1, h >= 1, the p_j pairwise coprime and >= 2,
/// gcd(q, t prod p_j) = 1.
WitnessSeed witness_seed(const Natural& t, const std::vector<Natural>& primes, std::uint64_t h,
                         const Natural& q);

/// Witness at k_tuple (every entry >= k0). Checked with mod_pow before return.
CongruenceWitness congruence_witness(const Natural& t, const std::vector<Natural>& primes,
                                  std::uint64_t h, const std::vector<std::uint64_t>& k_tuple,
                                  const Natural& q);
CongruenceWitness congruence_witness(const WitnessSeed& seed, const std::vector<std::uint64_t>& k_tuple);

/// Recomputes the congruence and the bounds on b from the stored fields.
bool check_congruence(const CongruenceWitness& w);

/// Proof-faithful threshold beyond which alpha / prod p_j^k_j is outside K.
struct ExclusionBound {
  Rational alpha;
  DigitCantorSet cantor;
  std::vector<Natural> primes;
  std::uint64_t h = 1;
  Gap gap;
  Natural p_hat;
  Natural b_hat;
  Natural m;
  std::uint64_t k_alpha = 0;
  std::uint64_t reduction_r = 0;
  /// alpha q^r / (prod p)^r: coprime to prod p above, to q below.
  Rational alpha_hat;
  Natural b;
  std::uint64_t k0 = 0;
};

ExclusionBound exclusion_bound(const Rational& alpha, const DigitCantorSet& k,
                               const std::vector<Natural>& primes);

/// Smallest j <= k_alpha with no member alpha / prod p^k for k in [j, k_alpha]^l.
/// Shows how far the guaranteed bound sits above the observed one.
std::uint64_t empirical_threshold(const ExclusionBound& bound);

/// q^exponent_N * value mod 1 lands strictly inside gap, a gap of K.
struct ExclusionCertificate {
  Rational value;
  DigitCantorSet cantor;
  Natural exponent_N;  // NOLINT(readability-identifier-naming)
  Rational shifted_residue;
  Gap gap;

  friend bool operator==(const ExclusionCertificate&, const ExclusionCertificate&) = default;
};

ExclusionCertificate make_certificate(const Rational& alpha, const DigitCantorSet& k,
                                      const std::vector<Natural>& primes,
                                      const std::vector<std::uint64_t>& k_tuple);
ExclusionCertificate make_certificate(const ExclusionBound& bound,
                                      const std::vector<std::uint64_t>& k_tuple);

/// Total: recomputes everything from value, exponent_N and the digit set.
/// true is a proof that value is not in K.
bool verify_certificate(const ExclusionCertificate& cert);

}  // namespace qadic
