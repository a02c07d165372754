#include "qadic/number_theory.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

namespace qadic {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialBound = 1'000'000;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialBound, false);
    std::vector<u64> out;
    for (u64 i = 2; i < kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j < kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 result = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return result;
}

bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are exact for every 64-bit n.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool miller_rabin_mpz(const mpz_class& n) {
  // First 13 primes as bases: deterministic for n < 3317044064679887385961981.
  mpz_class d = n - 1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  const mpz_class n_minus_1 = n - 1;
  for (unsigned long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
    mpz_class x;
    mpz_class base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool witness = true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Brent's cycle finding with batched gcds. Returns a nontrivial divisor of the
// composite n, retrying with new polynomial constants as needed.
mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  gmp_randclass gmp_rng(gmp_randinit_default);
  gmp_rng.seed(static_cast<unsigned long>(rng()));
  constexpr unsigned long kBatch = 128;
  for (;;) {
    const mpz_class c = gmp_rng.get_z_range(n - 1) + 1;
    mpz_class y = gmp_rng.get_z_range(n);
    mpz_class g = 1, q = 1, x, ys;
    unsigned long r = 1;
    auto step = [&](mpz_class& v) {
      v = v * v + c;
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long lim = std::min(kBatch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += kBatch;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        step(ys);
        mpz_class diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace

Natural gcd(const Natural& a, const Natural& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return Natural(std::move(g));
}

Natural lcm(const Natural& a, const Natural& b) {
  if (a.is_zero() || b.is_zero()) throw PreconditionError("lcm requires nonzero arguments");
  return a / gcd(a, b) * b;
}

Natural mod_pow(const Natural& a, const Natural& e, const Natural& m) {
  if (m.is_zero()) throw PreconditionError("mod_pow with modulus 0");
  mpz_class r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return Natural(std::move(r));
}

std::optional<Natural> mod_inverse(const Natural& a, const Natural& m) {
  if (m.is_zero()) throw PreconditionError("mod_inverse with modulus 0");
  if (m.is_one()) return Natural(0);
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return Natural(std::move(r));
}

bool is_prime(const Natural& n) {
  if (n < 2) return false;
  if (n.fits_u64()) return miller_rabin_u64(n.to_u64());
  static const mpz_class kDeterministicBound("3317044064679887385961981", 10);
  for (unsigned long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return false;
  }
  if (n.mpz() < kDeterministicBound) return miller_rabin_mpz(n.mpz());
  return mpz_probab_prime_p(n.get_mpz_t(), 25) > 0;
}

Factorization factorize(const Natural& n) {
  if (n.is_zero()) throw PreconditionError("factorize(0) is undefined");
  std::map<Natural, std::uint64_t> found;
  mpz_class rest = n.mpz();

  bool trial_exhausted = true;
  for (u64 p : small_primes()) {
    if (rest == 1) break;
    if (mpz_fits_ulong_p(rest.get_mpz_t()) != 0) {
      u64 r = rest.get_ui();
      if (static_cast<u128>(p) * p > r) {
        trial_exhausted = false;
        break;
      }
      if (r % p != 0) continue;
      std::uint64_t e = 0;
      while (r % p == 0) {
        r /= p;
        ++e;
      }
      found[Natural(p)] += e;
      rest = static_cast<unsigned long>(r);
      continue;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    std::uint64_t e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    found[Natural(p)] += e;
  }

  if (rest != 1) {
    // Without a factor below the trial bound, anything below its square is prime.
    const bool surely_prime =
        !trial_exhausted || rest < mpz_class(static_cast<unsigned long>(kTrialBound * kTrialBound));
    std::vector<mpz_class> pending{rest};
    if (surely_prime) {
      found[Natural(rest)] += 1;
      pending.clear();
    }
    while (!pending.empty()) {
      mpz_class m = std::move(pending.back());
      pending.pop_back();
      if (m == 1) continue;
      if (is_prime(Natural(m))) {
        found[Natural(m)] += 1;
        continue;
      }
      mpz_class d = pollard_brent(m);
      pending.push_back(m / d);
      pending.push_back(std::move(d));
    }
  }

  Factorization out;
  out.reserve(found.size());
  for (auto& [p, e] : found) out.push_back({p, e});
  return out;
}

Natural expand_factorization(const Factorization& f) {
  Natural out = 1;
  for (const auto& pp : f) out *= Natural::pow(pp.prime, pp.exponent);
  return out;
}

Natural euler_phi(const Factorization& f) {
  Natural out = 1;
  for (const auto& pp : f) out *= Natural::pow(pp.prime, pp.exponent - 1) * (pp.prime - 1);
  return out;
}

Natural euler_phi(const Natural& n) {
  if (n.is_zero()) throw PreconditionError("euler_phi(0) is undefined");
  return euler_phi(factorize(n));
}

Valuation valuation(const Natural& n, const Natural& p) {
  if (p < 2) throw PreconditionError("valuation base must be at least 2");
  if (n.is_zero()) throw PreconditionError("valuation of 0 is unbounded");
  mpz_class rest;
  const auto e = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return {static_cast<std::uint64_t>(e), Natural(std::move(rest))};
}

CoprimeSplit split_coprime_part(const Natural& t, const Natural& q) {
  if (t.is_zero()) throw PreconditionError("split_coprime_part requires t >= 1");
  if (q < 2) throw PreconditionError("split_coprime_part requires q >= 2");
  CoprimeSplit out{t, 1, 0};
  for (Natural g = gcd(out.t_hat, q); !g.is_one(); g = gcd(out.t_hat, q)) {
    out.t_hat /= g;
    out.u *= g;
  }
  // Smallest v with u | q^v, by walking q^v mod u.
  Natural r = Natural(1) % out.u;
  while (!r.is_zero()) {
    r = r * q % out.u;
    ++out.v;
  }
  return out;
}

PerfectPower perfect_power(const Natural& n) {
  if (n < 2) throw PreconditionError("perfect_power requires n >= 2");
  for (std::size_t e = n.bit_length(); e >= 2; --e) {
    mpz_class root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
      return {Natural(std::move(root)), static_cast<std::uint64_t>(e)};
    }
  }
  return {n, 1};
}

}  // namespace qadic
