#include "qadic/certificates.hpp"

#include <algorithm>

#include "qadic/number_theory.hpp"

namespace qadic {
namespace {

Natural product(const std::vector<Natural>& xs) {
  Natural out = 1;
  for (const Natural& x : xs) out *= x;
  return out;
}

Natural product_of_powers(const std::vector<Natural>& primes, const std::vector<std::uint64_t>& k,
                          std::uint64_t extra = 0) {
  Natural out = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) out *= Natural::pow(primes[i], k[i] + extra);
  return out;
}

void require_pairwise_coprime(const std::vector<Natural>& primes) {
  if (primes.empty()) throw PreconditionError("at least one p_j is required");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i] < 2) throw PreconditionError("every p_j must be at least 2");
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      if (!gcd(primes[i], primes[j]).is_one()) {
        throw PreconditionError("p_j must be distinct and pairwise coprime; got " +
                                primes[i].to_string() + " and " + primes[j].to_string());
      }
    }
  }
}

void require_coprime_to_q(const Natural& q, const Natural& x, const char* what) {
  const Natural g = gcd(q, x);
  if (!g.is_one()) {
    throw PreconditionError(std::string("gcd(q,") + what + ") = " + g.to_string() + " != 1");
  }
}

Rational alpha_over(const Rational& alpha, const std::vector<Natural>& primes,
                    const std::vector<std::uint64_t>& k) {
  return alpha / Rational(product_of_powers(primes, k));
}

bool member(const DigitCantorSet& cantor, const Rational& x) {
  return x <= Rational(1) && contains(cantor, x);
}

}  // namespace

WitnessSeed witness_seed(const Natural& t, const std::vector<Natural>& primes, std::uint64_t h,
                         const Natural& q) {
  if (q < 2) throw PreconditionError("q must be at least 2");
  if (t.is_zero()) throw PreconditionError("t must be at least 1");
  if (h == 0) throw PreconditionError("h must be at least 1");
  require_pairwise_coprime(primes);
  const Natural big_p = product(primes);
  require_coprime_to_q(q, t * big_p, "t*prod(p)");

  WitnessSeed seed{q, t, primes, h, euler_phi(t * Natural::pow(big_p, h + 1)), {}, 0, 0};

  // q^n0 - 1 = a t prod p_j^r_j with p_j not dividing a. Only the r_j and
  // a mod P^h are needed, so work modulo t P^R and grow R until every
  // valuation is visible and R >= h + max r_j.
  for (std::uint64_t big_r = 2 * (h + 1);; big_r *= 2) {
    const Natural modulus = t * Natural::pow(big_p, big_r);
    const Natural shifted = (mod_pow(q, seed.totient, modulus) + modulus - 1) % modulus;
    if (!divides(t, shifted)) throw InternalError("Fermat-Euler congruence failed");
    const Natural y = shifted / t;
    if (y.is_zero()) continue;
    std::vector<std::uint64_t> r;
    bool resolved = true;
    for (const Natural& p : primes) {
      r.push_back(valuation(y, p).exponent);
      if (r.back() >= big_r) resolved = false;
    }
    if (!resolved || big_r < h + *std::max_element(r.begin(), r.end())) continue;

    const Natural a = y / product_of_powers(primes, r);
    seed.b = a % Natural::pow(big_p, h);
    seed.base_exponents.clear();
    for (std::uint64_t rj : r) {
      if (rj < h + 1) throw InternalError("valuation below h + 1 after Fermat-Euler");
      seed.base_exponents.push_back(rj + 1);
    }
    seed.k0 = *std::max_element(seed.base_exponents.begin(), seed.base_exponents.end());
    return seed;
  }
}

CongruenceWitness congruence_witness(const WitnessSeed& seed, const std::vector<std::uint64_t>& k_tuple) {
  if (k_tuple.size() != seed.primes.size()) {
    throw PreconditionError("k tuple length must match the number of p_j");
  }
  for (std::uint64_t k : k_tuple) {
    if (k < seed.k0) {
      throw PreconditionError("k tuple entries must be >= k0 = " + std::to_string(seed.k0));
    }
  }
  Natural n = seed.totient * product(seed.primes);
  for (std::size_t i = 0; i < k_tuple.size(); ++i) {
    n *= Natural::pow(seed.primes[i], k_tuple[i] - seed.base_exponents[i]);
  }
  CongruenceWitness w{seed.q, seed.t, seed.primes, seed.h, seed.b, seed.k0, std::move(n), k_tuple};
  if (!check_congruence(w)) throw InternalError("constructed congruence witness failed its check");
  return w;
}

CongruenceWitness congruence_witness(const Natural& t, const std::vector<Natural>& primes,
                                  std::uint64_t h, const std::vector<std::uint64_t>& k_tuple,
                                  const Natural& q) {
  return congruence_witness(witness_seed(t, primes, h, q), k_tuple);
}

bool check_congruence(const CongruenceWitness& w) {
  if (w.primes.empty() || w.k_tuple.size() != w.primes.size() || w.t.is_zero()) return false;
  const Natural bound = Natural::pow(product(w.primes), w.h);
  if (w.b.is_zero() || w.b >= bound) return false;
  for (const Natural& p : w.primes) {
    if (p < 2 || divides(p, w.b)) return false;
  }
  const Natural modulus = w.t * product_of_powers(w.primes, w.k_tuple, w.h);
  const Natural rhs = (1 + w.b * w.t * product_of_powers(w.primes, w.k_tuple)) % modulus;
  return mod_pow(w.q, w.exponent_n, modulus) == rhs;
}

ExclusionBound exclusion_bound(const Rational& alpha, const DigitCantorSet& k,
                               const std::vector<Natural>& primes) {
  if (alpha.is_zero()) throw PreconditionError("alpha must be positive");
  require_pairwise_coprime(primes);
  const Natural q = k.base();
  const Natural big_p = product(primes);
  require_coprime_to_q(q, big_p, "prod(p)");

  // Smallest r making the numerator coprime to P and the denominator coprime to q.
  const Natural& s = alpha.num();
  const Natural& t = alpha.den();
  std::uint64_t r = 0;
  while (!gcd(s / gcd(s, Natural::pow(big_p, r)), big_p).is_one() ||
         !gcd(t / gcd(t, Natural::pow(q, r)), q).is_one()) {
    ++r;
  }
  const Rational alpha_hat = alpha * Rational(Natural::pow(q, r), Natural::pow(big_p, r));

  const Gap gap = largest_gap(k);
  const Rational g = gap.length();
  std::uint64_t h = 1;
  while (Natural::pow(2, h) * g.num() <= g.den()) ++h;

  const WitnessSeed seed = witness_seed(alpha_hat.den(), primes, h, q);
  const Natural p_h = Natural::pow(big_p, h);
  const Natural shared = gcd(seed.b, p_h);
  const Natural b_hat = seed.b / shared;
  const Natural p_hat = p_h / shared;
  if (Rational(1, p_hat) >= g) throw InternalError("1/p_hat must be shorter than the gap");

  const Natural m = (gap.left * Rational(p_hat)).floor() + 1;
  const Rational landing(m, p_hat);
  if (!gap.contains(landing)) throw InternalError("m / p_hat must fall inside the gap");
  const Rational room = gap.right - landing;

  std::uint64_t k_hat = seed.k0 + 2 * h;
  while (alpha_hat / Rational(Natural::pow(big_p, k_hat)) >= room) ++k_hat;

  return {alpha, k,      primes,    h,       gap,     p_hat, b_hat,
          m,     k_hat + r, r,      alpha_hat, seed.b, seed.k0};
}

std::uint64_t empirical_threshold(const ExclusionBound& bound) {
  const std::size_t l = bound.primes.size();
  std::uint64_t j = bound.k_alpha;
  while (j > 0) {
    // Tuples in [j-1, k_alpha]^l with at least one coordinate equal to j-1.
    bool shell_has_member = false;
    std::vector<std::uint64_t> k(l, j - 1);
    for (;;) {
      const bool on_shell = std::find(k.begin(), k.end(), j - 1) != k.end();
      if (on_shell && member(bound.cantor, alpha_over(bound.alpha, bound.primes, k))) {
        shell_has_member = true;
        break;
      }
      std::size_t i = 0;
      while (i < l && k[i] == bound.k_alpha) k[i++] = j - 1;
      if (i == l) break;
      ++k[i];
    }
    if (shell_has_member) break;
    --j;
  }
  return j;
}

ExclusionCertificate make_certificate(const ExclusionBound& bound,
                                      const std::vector<std::uint64_t>& k_tuple) {
  if (k_tuple.size() != bound.primes.size()) {
    throw PreconditionError("k tuple length must match the number of p_j");
  }
  for (std::uint64_t kj : k_tuple) {
    if (kj < bound.k_alpha) {
      throw PreconditionError("k tuple entries must be >= k_alpha = " + std::to_string(bound.k_alpha));
    }
  }
  const Natural q = bound.cantor.base();
  const Rational value = alpha_over(bound.alpha, bound.primes, k_tuple);

  // Work with z = q^r value = alpha_hat / prod p^(k - r), then shift by the
  // witness exponent for the tuple (k - r - h).
  std::vector<std::uint64_t> reduced(k_tuple.size());
  std::vector<std::uint64_t> witness_k(k_tuple.size());
  for (std::size_t i = 0; i < k_tuple.size(); ++i) {
    reduced[i] = k_tuple[i] - bound.reduction_r;
    witness_k[i] = reduced[i] - bound.h;
  }
  const CongruenceWitness w =
      congruence_witness(bound.alpha_hat.den(), bound.primes, bound.h, witness_k, q);

  const Natural unit = bound.alpha_hat.num() * bound.b_hat % bound.p_hat;
  const auto inverse = mod_inverse(unit, bound.p_hat);
  if (!inverse) throw InternalError("s * b_hat must be invertible modulo p_hat");
  const Natural i_m = bound.m * *inverse % bound.p_hat;

  ExclusionCertificate cert{value, bound.cantor, bound.reduction_r + i_m * w.exponent_n, {}, bound.gap};
  cert.shifted_residue = shift(value, bound.cantor.base(), cert.exponent_N);

  const Rational z = alpha_over(bound.alpha_hat, bound.primes, reduced);
  if (cert.shifted_residue != z + Rational(bound.m, bound.p_hat) ||
      !bound.gap.contains(cert.shifted_residue)) {
    throw InternalError("shifted residue missed the gap for value " + value.to_string());
  }
  return cert;
}

ExclusionCertificate make_certificate(const Rational& alpha, const DigitCantorSet& k,
                                      const std::vector<Natural>& primes,
                                      const std::vector<std::uint64_t>& k_tuple) {
  return make_certificate(exclusion_bound(alpha, k, primes), k_tuple);
}

bool verify_certificate(const ExclusionCertificate& cert) {
  try {
    if (cert.value >= Rational(1)) return false;
    const Gap gap = largest_gap(cert.cantor);
    if (gap != cert.gap) return false;
    const Rational residue = shift(cert.value, cert.cantor.base(), cert.exponent_N);
    return residue == cert.shifted_residue && gap.contains(residue);
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace qadic
