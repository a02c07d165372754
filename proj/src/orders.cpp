#include "qadic/orders.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qadic/number_theory.hpp"

namespace qadic {
namespace {

void require_coprime(const Natural& a, const Natural& m, const char* a_name, const char* m_name) {
  const Natural g = gcd(a, m);
  if (!g.is_one()) {
    throw PreconditionError(std::string("gcd(") + a_name + "," + m_name + ") = " + g.to_string() +
                            " != 1 (" + a_name + " = " + a.to_string() + ", " + m_name + " = " +
                            m.to_string() + ")");
  }
}

void require_prime(const Natural& p) {
  if (!is_prime(p)) throw PreconditionError("p = " + p.to_string() + " is not prime");
}

// Prime factorization of phi(m), assembled from the factorization of m.
std::map<Natural, std::uint64_t> totient_factors(const Factorization& fm) {
  std::map<Natural, std::uint64_t> out;
  for (const auto& [p, e] : fm) {
    if (e > 1) out[p] += e - 1;
    if (p > 2) {
      for (const auto& [r, f] : factorize(p - 1)) out[r] += f;
    }
  }
  return out;
}

Natural product_of_powers(const std::vector<Natural>& primes, const std::vector<std::uint64_t>& k) {
  Natural out = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) out *= Natural::pow(primes[i], k[i]);
  return out;
}

// Calls f on every tuple in [lo, hi]^l; stops early when f returns false.
template <typename F>
bool for_each_tuple(std::size_t l, std::uint64_t lo, std::uint64_t hi, F&& f) {
  std::vector<std::uint64_t> k(l, lo);
  for (;;) {
    if (!f(k)) return false;
    std::size_t i = 0;
    while (i < l && k[i] == hi) k[i++] = lo;
    if (i == l) return true;
    ++k[i];
  }
}

}  // namespace

Natural mult_order(const Natural& a, const Natural& m) {
  if (m.is_zero()) throw PreconditionError("multiplicative order needs a modulus m >= 1");
  require_coprime(a, m, "a", "m");
  if (m.is_one()) return 1;

  const Factorization fm = factorize(m);
  const auto phi_factors = totient_factors(fm);
  Natural n = euler_phi(fm);
  for (const auto& [r, f] : phi_factors) {
    for (std::uint64_t i = 0; i < f; ++i) {
      const Natural candidate = n / r;
      if (!mod_pow(a, candidate, m).is_one()) break;
      n = candidate;
    }
  }
  return n;
}

OrderStabilization order_stabilization(const Natural& p, const Natural& q) {
  if (q < 2) throw PreconditionError("order stabilization needs q >= 2");
  require_prime(p);
  require_coprime(p, q, "p", "q");
  const Natural d2 = mult_order(q, p * p);
  const Valuation split = valuation(Natural::pow(q, d2.to_u64()) - 1, p);
  if (split.exponent < 2) throw InternalError("q^ord_{p^2}(q) - 1 must be divisible by p^2");
  return {p, q, split.exponent, d2, split.cofactor};
}

Natural order_of_prime_power(const Natural& p, const Natural& q, const Natural& k) {
  if (k.is_zero()) throw PreconditionError("prime power exponent k must be at least 1");
  const OrderStabilization st = order_stabilization(p, q);
  if (k >= st.k0) return Natural::pow(p, (k - st.k0).to_u64()) * st.d_k0;
  return mult_order(q, Natural::pow(p, k.to_u64()));
}

Natural order_lcm(const Natural& a, const Natural& m1, const Natural& m2) {
  if (m1.is_zero() || m2.is_zero()) throw PreconditionError("moduli must be at least 1");
  require_coprime(m1, m2, "m1", "m2");
  require_coprime(a, m1 * m2, "a", "m1*m2");
  return lcm(mult_order(a, m1), mult_order(a, m2));
}

ProductStabilization product_stabilization(const std::vector<Natural>& primes, const Natural& q) {
  if (primes.empty()) throw PreconditionError("product stabilization needs at least one prime");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      if (primes[i] == primes[j]) {
        throw PreconditionError("repeated prime " + primes[i].to_string());
      }
    }
  }

  ProductStabilization out;
  std::uint64_t max_r = 0;
  std::uint64_t max_k0 = 0;
  for (const Natural& pj : primes) {
    const OrderStabilization st = order_stabilization(pj, q);
    out.thresholds.push_back(st.k0);
    max_k0 = std::max(max_k0, st.k0.to_u64());
    for (const Natural& pi : primes) max_r = std::max(max_r, valuation(st.d_k0, pi).exponent);
  }
  const std::uint64_t n0 = max_r + max_k0;
  out.n0 = n0;

  const std::size_t l = primes.size();
  auto identity_holds_from = [&](std::uint64_t n, std::uint64_t hi) {
    const Natural base_order = mult_order(q, product_of_powers(primes, std::vector(l, n)));
    return for_each_tuple(l, n, hi, [&](const std::vector<std::uint64_t>& k) {
      std::vector<std::uint64_t> excess(l);
      for (std::size_t i = 0; i < l; ++i) excess[i] = k[i] - n;
      return mult_order(q, product_of_powers(primes, k)) ==
             product_of_powers(primes, excess) * base_order;
    });
  };

  if (!identity_holds_from(n0, n0 + 1)) {
    throw InternalError("product stabilization identity failed at n0 = " + std::to_string(n0));
  }
  out.smallest_checked = n0;
  for (std::uint64_t n = 1; n < n0; ++n) {
    if (identity_holds_from(n, n0 + 1)) {
      out.smallest_checked = n;
      break;
    }
  }
  return out;
}

CosetDecomposition coset_decomposition(const Natural& m, const Natural& q) {
  if (m.is_zero()) throw PreconditionError("modulus must be at least 1");
  require_coprime(q, m, "q", "m");
  if (m > Natural(std::uint64_t{1} << 32)) {
    throw PreconditionError("coset enumeration limited to moduli below 2^32");
  }
  CosetDecomposition out{m, q, {}, mult_order(q, m)};
  if (m.is_one()) {
    out.representatives.push_back(1);
    return out;
  }
  const std::uint64_t mod = m.to_u64();
  const std::uint64_t g = (q % m).to_u64();
  const std::uint64_t expected = out.orbit_size.to_u64();
  std::vector<bool> seen(mod, false);
  for (std::uint64_t a = 1; a < mod; ++a) {
    if (seen[a] || std::gcd(a, mod) != 1) continue;
    out.representatives.push_back(a);
    std::uint64_t c = a;
    std::uint64_t size = 0;
    do {
      seen[c] = true;
      c = c * g % mod;
      ++size;
    } while (c != a);
    if (size != expected) throw InternalError("orbit size disagrees with ord_m(q)");
  }
  return out;
}

std::optional<Natural> orbit_witness(const Natural& x, const Natural& y, const Natural& q,
                                     const Natural& m) {
  if (m.is_zero()) throw PreconditionError("modulus must be at least 1");
  require_coprime(q, m, "q", "m");
  require_coprime(x, m, "x", "m");
  require_coprime(y, m, "y", "m");
  const Natural target = y % m;
  const Natural ord = mult_order(q, m);
  Natural c = x % m;
  for (Natural n = 1; n <= ord; ++n) {
    c = c * q % m;
    if (c == target) return n;
  }
  return std::nullopt;
}

}  // namespace qadic
