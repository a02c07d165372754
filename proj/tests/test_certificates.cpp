#include <doctest.h>

#include "qadic/cantor.hpp"
#include "qadic/certificates.hpp"
#include "qadic/errors.hpp"
#include "qadic/io.hpp"
#include "qadic/number_theory.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace qadic;
using testing_helpers::naturals;
using testing_helpers::R;

namespace {

Natural product_power(const std::vector<Natural>& primes, const std::vector<std::uint64_t>& ks) {
  Natural out = 1;
  for (std::size_t j = 0; j < primes.size(); ++j) out *= Natural::pow(primes[j], ks[j]);
  return out;
}

Natural product_power(const std::vector<Natural>& primes, std::uint64_t k) {
  return product_power(primes, std::vector<std::uint64_t>(primes.size(), k));
}

// Congruence re-evaluated from scratch rather than through check_congruence.
bool congruence_holds(const CongruenceWitness& w) {
  const Natural modulus = w.t * product_power(w.primes, w.k_tuple) * product_power(w.primes, w.h);
  const Natural rhs = (w.b * w.t * product_power(w.primes, w.k_tuple) + 1) % modulus;
  if (mod_pow(w.q, w.exponent_n, modulus) != rhs) return false;
  if (w.b.is_zero() || !(w.b < product_power(w.primes, w.h))) return false;
  for (const Natural& p : w.primes) {
    if (divides(p, w.b)) return false;
  }
  return true;
}

bool oracle_member(const DigitCantorSet& k, const Rational& x) {
  if (Rational(1) < x) return false;
  const auto verdict = oracle::member_by_digit_search(x.num().mpz(), x.den().mpz(), k.base(), k.digits());
  REQUIRE(verdict.has_value());
  return *verdict;
}

Rational value_at(const ExclusionBound& b, const std::vector<std::uint64_t>& ks) {
  return b.alpha / Rational(product_power(b.primes, ks));
}

}  // namespace

TEST_CASE("congruence_witness examples") {
  const WitnessSeed seed = witness_seed(1, naturals({3, 7}), 1, 10);
  const CongruenceWitness w = congruence_witness(seed, {seed.k0, seed.k0});
  CHECK(check_congruence(w));
  CHECK(congruence_holds(w));

  const CongruenceWitness two = congruence_witness(1, naturals({3}), 1, {3}, 2);
  CHECK(congruence_holds(two));
  CHECK((two.b == Natural(1) || two.b == Natural(2)));
  // Some n satisfies the same congruence by direct search.
  bool found = false;
  for (std::uint64_t n = 1; n <= 200 && !found; ++n) {
    found = oracle::pow_mod(2, n, 81) == 1 + 27 * two.b.to_u64();
  }
  CHECK(found);

  CHECK_THROWS_AS(congruence_witness(1, naturals({5}), 1, {5}, 10), PreconditionError);
}

TEST_CASE("congruence_witness reports the required k0") {
  const WitnessSeed seed = witness_seed(1, naturals({3}), 1, 2);
  try {
    (void)congruence_witness(seed, {seed.k0 - 1});
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find(std::to_string(seed.k0)) != std::string::npos);
  }
  CHECK_THROWS_AS(congruence_witness(seed, {seed.k0, seed.k0}), PreconditionError);
  CHECK_THROWS_AS(witness_seed(1, naturals({3, 3}), 1, 2), PreconditionError);
  CHECK_THROWS_AS(witness_seed(1, naturals({3}), 0, 2), PreconditionError);
}

TEST_CASE("property: witnesses pass their congruence check") {
  int checked = 0;
  for (std::uint64_t q : {2, 3, 10}) {
    for (std::uint64_t t = 1; t <= 6; ++t) {
      for (const auto& primes : {naturals({5}), naturals({7}), naturals({3, 11}), naturals({7, 13})}) {
        const Natural all = product_power(primes, 1) * t;
        if (!gcd(all, q).is_one()) continue;
        for (std::uint64_t h = 1; h <= 2; ++h) {
          const WitnessSeed seed = witness_seed(t, primes, h, q);
          for (std::uint64_t extra = 0; extra <= 3; ++extra) {
            std::vector<std::uint64_t> ks(primes.size(), seed.k0);
            ks.back() += extra;
            const CongruenceWitness w = congruence_witness(seed, ks);
            REQUIRE(congruence_holds(w));
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked >= 50);
}

TEST_CASE("exclusion_bound examples") {
  const ExclusionBound b = exclusion_bound(1, DigitCantorSet(3, {0, 1}), naturals({2}));
  CHECK(b.k_alpha == 9);
  CHECK(b.h == 2);
  CHECK(b.m == Natural(3));
  CHECK(b.p_hat == Natural(4));
  for (std::uint64_t k = b.k_alpha; k <= b.k_alpha + 50; ++k) {
    CHECK_FALSE(oracle_member(b.cantor, Rational(1, Natural::pow(2, k))));
  }

  const ExclusionBound c = exclusion_bound(1, DigitCantorSet(3, {0, 2}), naturals({2}));
  CHECK(c.gap == Gap{R("1/3"), R("2/3")});
  CHECK(c.gap.length() == R("1/3"));
  CHECK(c.h == 2);

  CHECK_THROWS_AS(exclusion_bound(1, DigitCantorSet(3, {0, 2}), naturals({3})), PreconditionError);
  CHECK_THROWS_AS(exclusion_bound(0, DigitCantorSet(3, {0, 2}), naturals({2})), PreconditionError);
}

TEST_CASE("property: bound fields satisfy the displayed inequalities exactly") {
  const std::vector<std::tuple<Rational, DigitCantorSet, std::vector<Natural>>> cases{
      {1, DigitCantorSet(3, {0, 1}), naturals({2})},
      {1, DigitCantorSet(3, {0, 2}), naturals({2})},
      {R("1/6"), DigitCantorSet(3, {0, 1}), naturals({2})},
      {R("5/7"), DigitCantorSet(10, {0, 5}), naturals({3, 7})},
      {2, DigitCantorSet(3, {0, 2}), naturals({5, 7})},
      {R("7/9"), DigitCantorSet(3, {1, 2}), naturals({2})},
      {R("3/4"), DigitCantorSet(5, {0, 2, 4}), naturals({2, 3})},
      {R("1/50"), DigitCantorSet(10, {1, 3, 7}), naturals({3})},
      {R("12"), DigitCantorSet(7, {0, 6}), naturals({2})},
  };
  for (const auto& [alpha, k, primes] : cases) {
    const ExclusionBound b = exclusion_bound(alpha, k, primes);
    const Natural P = product_power(primes, 1);
    const Rational inv_g = Rational(1) / b.gap.length();
    CHECK(b.gap == largest_gap(k));
    CHECK(inv_g < Rational(Natural::pow(2, b.h)));
    CHECK_FALSE(inv_g < Rational(Natural::pow(2, b.h - 1)));
    const Rational target(b.m, b.p_hat);
    CHECK(b.gap.contains(target));
    CHECK_FALSE(b.gap.contains(Rational(b.m - 1, b.p_hat)));
    CHECK(gcd(b.b_hat, b.p_hat).is_one());
    CHECK(divides(b.p_hat, Natural::pow(P, b.h)));
    CHECK(b.alpha_hat == alpha * Rational(Natural::pow(k.base(), b.reduction_r)) /
                             Rational(Natural::pow(P, b.reduction_r)));
    CHECK(gcd(b.alpha_hat.num(), P).is_one());
    CHECK(gcd(b.alpha_hat.den(), k.base()).is_one());
    const std::uint64_t k_hat = b.k_alpha - b.reduction_r;
    CHECK(k_hat >= b.k0 + 2 * b.h);
    CHECK(b.alpha_hat / Rational(Natural::pow(P, k_hat)) < b.gap.right - target);
    // One step lower breaks one of the two conditions.
    const bool lower_ok = k_hat > b.k0 + 2 * b.h &&
                          b.alpha_hat / Rational(Natural::pow(P, k_hat - 1)) < b.gap.right - target;
    CHECK_FALSE(lower_ok);
  }
}

TEST_CASE("make_certificate examples") {
  const DigitCantorSet k01(3, {0, 1});
  const ExclusionBound b = exclusion_bound(1, k01, naturals({2}));
  const ExclusionCertificate cert = make_certificate(b, {b.k_alpha});
  CHECK(cert.value == Rational(1, Natural::pow(2, b.k_alpha)));
  CHECK(verify_certificate(cert));
  CHECK_FALSE(oracle_member(k01, cert.value));
  CHECK(shift(cert.value, 3, cert.exponent_N) == cert.shifted_residue);

  const DigitCantorSet k02(3, {0, 2});
  const ExclusionBound c = exclusion_bound(1, k02, naturals({2}));
  const ExclusionCertificate later = make_certificate(c, {c.k_alpha + 5});
  CHECK(verify_certificate(later));
  CHECK_FALSE(oracle_member(k02, later.value));

  // A factor 3 in the denominator forces the reduction branch.
  const ExclusionBound reduced = exclusion_bound(R("1/6"), k01, naturals({2}));
  CHECK(reduced.reduction_r >= 1);
  const ExclusionCertificate r = make_certificate(reduced, {reduced.k_alpha});
  CHECK(verify_certificate(r));
  CHECK_FALSE(oracle_member(k01, r.value));

  CHECK_THROWS_AS(make_certificate(b, {b.k_alpha - 1}), PreconditionError);
  CHECK_THROWS_AS(make_certificate(b, {b.k_alpha, b.k_alpha}), PreconditionError);
}

TEST_CASE("verify_certificate rejects tampering and members") {
  const ExclusionBound b = exclusion_bound(1, DigitCantorSet(3, {0, 1}), naturals({2}));
  int rejected = 0;
  for (std::uint64_t k = b.k_alpha; k < b.k_alpha + 20; ++k) {
    ExclusionCertificate cert = make_certificate(b, {k});
    cert.exponent_N += 1;
    if (!verify_certificate(cert)) ++rejected;
  }
  CHECK(rejected >= 15);

  // 1/4 is in K(3, {0, 2}): no claimed exponent may certify it.
  const DigitCantorSet k02(3, {0, 2});
  for (std::uint64_t n = 0; n < 40; ++n) {
    const Rational x = R("1/4");
    ExclusionCertificate forged{x, k02, n, shift(x, 3, n), largest_gap(k02)};
    CHECK_FALSE(verify_certificate(forged));
    forged.shifted_residue = R("1/2");
    CHECK_FALSE(verify_certificate(forged));
  }

  ExclusionCertificate wrong_gap = make_certificate(b, {b.k_alpha});
  wrong_gap.gap = Gap{R("0"), R("1")};
  CHECK_FALSE(verify_certificate(wrong_gap));
  ExclusionCertificate too_big = make_certificate(b, {b.k_alpha});
  too_big.value = R("3/2");
  CHECK_FALSE(verify_certificate(too_big));
}

TEST_CASE("property: verified certificates never describe members") {
  const std::vector<std::tuple<Rational, DigitCantorSet, std::vector<Natural>>> cases{
      {1, DigitCantorSet(3, {0, 1}), naturals({2})},
      {1, DigitCantorSet(3, {0, 2}), naturals({2})},
      {R("1/6"), DigitCantorSet(3, {0, 1}), naturals({2})},
      {R("5/7"), DigitCantorSet(10, {0, 5}), naturals({3, 7})},
      {2, DigitCantorSet(3, {0, 2}), naturals({5, 7})},
      {R("7/9"), DigitCantorSet(3, {1, 2}), naturals({2})},
      {R("3/4"), DigitCantorSet(5, {0, 2, 4}), naturals({2, 3})},
      {R("1/50"), DigitCantorSet(10, {1, 3, 7}), naturals({3})},
      {R("12"), DigitCantorSet(7, {0, 6}), naturals({2})},
      {R("2/5"), DigitCantorSet(4, {0, 3}), naturals({5})},
  };
  int certified = 0;
  for (const auto& [alpha, k, primes] : cases) {
    const ExclusionBound b = exclusion_bound(alpha, k, primes);
    for (std::uint64_t step = 0; step < 25; ++step) {
      std::vector<std::uint64_t> ks(primes.size(), b.k_alpha);
      ks[step % ks.size()] += step;
      const ExclusionCertificate cert = make_certificate(b, ks);
      CHECK(cert.value == value_at(b, ks));
      REQUIRE(verify_certificate(cert));
      REQUIRE_FALSE(oracle_member(k, cert.value));
      REQUIRE_FALSE(contains(k, cert.value));
      ++certified;
    }
  }
  CHECK(certified >= 200);
}

TEST_CASE("property: certificates exist for twenty consecutive k past k_alpha") {
  const ExclusionBound b = exclusion_bound(1, DigitCantorSet(3, {0, 1}), naturals({2}));
  for (std::uint64_t k = b.k_alpha; k <= b.k_alpha + 20; ++k) {
    CHECK(verify_certificate(make_certificate(b, {k})));
  }
}

TEST_CASE("huge exponents stay cheap") {
  const ExclusionBound b = exclusion_bound(1, DigitCantorSet(3, {0, 2}), naturals({5, 7}));
  const ExclusionCertificate cert = make_certificate(b, {b.k_alpha + 150, b.k_alpha + 150});
  CHECK(cert.exponent_N.to_string().size() > 200);
  CHECK(verify_certificate(cert));
}

TEST_CASE("certificates survive a JSON round trip") {
  const ExclusionBound b = exclusion_bound(R("5/7"), DigitCantorSet(10, {0, 5}), naturals({3, 7}));
  const ExclusionCertificate cert = make_certificate(b, {b.k_alpha + 2, b.k_alpha});
  const auto text = io::to_json(cert).dump();
  const ExclusionCertificate back = io::certificate_from_json(io::Json::parse(text));
  CHECK(back == cert);
  CHECK(verify_certificate(back));
  CHECK(text.find('.') == std::string::npos);

  auto broken = io::to_json(cert);
  broken["exponent_N"] = "12x";
  CHECK_THROWS_AS(io::certificate_from_json(broken), PreconditionError);
  broken = io::to_json(cert);
  broken.erase("gap");
  CHECK_THROWS_AS(io::certificate_from_json(broken), PreconditionError);
}

TEST_CASE("empirical threshold never exceeds k_alpha") {
  const ExclusionBound b = exclusion_bound(1, DigitCantorSet(3, {0, 1}), naturals({2}));
  const std::uint64_t j = empirical_threshold(b);
  CHECK(j <= b.k_alpha);
  CHECK(j == 4);  // 1/8 is the last member below k_alpha
}
