#include "qadic/enumeration.hpp"

#include <algorithm>

#include "qadic/number_theory.hpp"
#include "qadic/orders.hpp"
#include "qadic/parallel.hpp"

namespace qadic {
namespace {

EnumerationRow evaluate_row(const DigitCantorSet& cantor, std::vector<std::uint64_t> index,
                            Rational value, bool with_digits) {
  EnumerationRow row{std::move(index), std::move(value), false, std::nullopt};
  if (row.value <= Rational(1)) row.member = contains(cantor, row.value);
  if (with_digits && row.value < Rational(1)) row.digits = digit_set(row.value, cantor.base());
  return row;
}

// Evaluates rows in parallel batches and hands them to the sink in order.
void run_rows(std::size_t count, const DigitCantorSet& cantor,
              const std::function<std::pair<std::vector<std::uint64_t>, Rational>(std::size_t)>& at,
              const RowSink& sink, std::vector<std::vector<std::uint64_t>>& members) {
  const std::size_t batch = std::max<std::size_t>(64, worker_count() * 16);
  for (std::size_t start = 0; start < count; start += batch) {
    const std::size_t stop = std::min(count, start + batch);
    std::vector<std::optional<EnumerationRow>> rows(stop - start);
    parallel_for(start, stop, [&](std::size_t i) {
      auto [index, value] = at(i);
      rows[i - start] = evaluate_row(cantor, std::move(index), std::move(value), bool(sink));
    });
    for (auto& row : rows) {
      if (row->member) members.push_back(row->index);
      if (sink) sink(*row);
    }
  }
}

void require_ratio(const Rational& alpha, const Rational& ratio) {
  if (alpha.is_zero()) throw PreconditionError("alpha must be positive");
  if (ratio.is_zero() || ratio >= Rational(1)) throw PreconditionError("ratio must lie in (0,1)");
}

bool has_prime_factor_outside(const Natural& n, const Natural& q) {
  return !split_coprime_part(n, q).t_hat.is_one();
}

}  // namespace

ExceptionalReport exceptional_geometric(const Rational& alpha, const Rational& ratio,
                                        const DigitCantorSet& cantor, std::uint64_t k_max,
                                        const RowSink& sink) {
  require_ratio(alpha, ratio);
  const Natural q = cantor.base();
  ExceptionalReport report{ExceptionalReport::Kind::geometric, alpha, ratio, {}, cantor, {}, k_max,
                           has_prime_factor_outside(ratio.den(), q), std::nullopt};

  run_rows(k_max, cantor,
           [&](std::size_t i) {
             const std::uint64_t k = i + 1;
             return std::pair{std::vector<std::uint64_t>{k}, alpha * pow(ratio, k)};
           },
           sink, report.members);

  if (ratio.num().is_one() && gcd(ratio.den(), q).is_one()) {
    report.certified_tail = exclusion_bound(alpha, cantor, {ratio.den()});
  }
  return report;
}

ExceptionalReport exceptional_lattice(const Rational& alpha, const std::vector<Natural>& primes,
                                      const DigitCantorSet& cantor, std::uint64_t box,
                                      const RowSink& sink) {
  if (alpha.is_zero()) throw PreconditionError("alpha must be positive");
  if (primes.empty()) throw PreconditionError("at least one p_j is required");
  const Natural q = cantor.base();
  Natural big_p = 1;
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i] < 2) throw PreconditionError("every p_j must be at least 2");
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      if (primes[i] == primes[j]) throw PreconditionError("repeated p_j " + primes[i].to_string());
      if (!gcd(primes[i], primes[j]).is_one()) pairwise_coprime = false;
    }
    if (!has_prime_factor_outside(primes[i], q)) {
      throw PreconditionError("p_j = " + primes[i].to_string() +
                              " has no prime factor outside q = " + q.to_string());
    }
    big_p *= primes[i];
  }

  ExceptionalReport report{ExceptionalReport::Kind::lattice, alpha, std::nullopt, primes, cantor, {},
                           box, true, std::nullopt};
  const std::size_t l = primes.size();
  const std::size_t side = box + 1;
  std::size_t count = 1;
  for (std::size_t i = 0; i < l; ++i) count *= side;

  // Index i enumerates tuples with the last coordinate varying fastest.
  run_rows(count, cantor,
           [&](std::size_t i) {
             std::vector<std::uint64_t> k(l);
             Natural denominator = 1;
             for (std::size_t j = l; j-- > 0;) {
               k[j] = i % side;
               i /= side;
               denominator *= Natural::pow(primes[j], k[j]);
             }
             return std::pair{std::move(k), alpha / Rational(denominator)};
           },
           sink, report.members);

  if (pairwise_coprime && gcd(big_p, q).is_one()) {
    report.certified_tail = exclusion_bound(alpha, cantor, primes);
  }
  return report;
}

std::vector<Rational> dp_intersection(const Natural& p, const DigitCantorSet& cantor,
                                      std::uint64_t exp_max) {
  if (p < 2) throw PreconditionError("p must be at least 2");
  const Natural q = cantor.base();
  if (!gcd(p, q).is_one()) {
    throw PreconditionError("gcd(p,q) = " + gcd(p, q).to_string() + " != 1");
  }
  const Factorization fp = factorize(p);
  const std::size_t l = fp.size();

  struct Found {
    std::uint64_t exponent;
    Rational value;
  };
  std::vector<Found> found;
  if (cantor.has_digit(0)) found.push_back({0, Rational(0)});

  std::vector<std::uint64_t> k(l, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < l && k[i] == fp[i].exponent * exp_max) k[i++] = 0;
    if (i == l) break;
    ++k[i];

    Natural d = 1;
    std::uint64_t exponent = 0;
    for (std::size_t j = 0; j < l; ++j) {
      d *= Natural::pow(fp[j].prime, k[j]);
      exponent = std::max(exponent, (k[j] + fp[j].exponent - 1) / fp[j].exponent);
    }
    // Membership is constant on each <q>-orbit of Z*_d.
    const CosetDecomposition cosets = coset_decomposition(d, q);
    for (const Natural& rep : cosets.representatives) {
      if (!contains(cantor, Rational(rep, d))) continue;
      Natural c = rep;
      do {
        found.push_back({exponent, Rational(c, d)});
        c = c * q % d;
      } while (c != rep);
    }
  }

  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    return a.exponent != b.exponent ? a.exponent < b.exponent : a.value < b.value;
  });
  std::vector<Rational> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.value));
  return out;
}

std::optional<std::uint64_t> all_digits_onset(const Rational& alpha, const Rational& ratio,
                                              std::uint64_t q, std::uint64_t k_max) {
  if (q < 3) throw PreconditionError("all-digits onset requires q >= 3");
  require_ratio(alpha, ratio);
  auto uses_every_digit = [&](std::uint64_t k) {
    const Rational x = alpha * pow(ratio, k);
    return x < Rational(1) && digit_set(x, q).size() == q;
  };
  if (k_max == 0 || !uses_every_digit(k_max)) return std::nullopt;
  std::uint64_t onset = k_max;
  while (onset > 1 && uses_every_digit(onset - 1)) --onset;
  return onset;
}

EuclidWitness euclid_witness(std::uint64_t q, std::uint64_t k) {
  if (q < 3) throw PreconditionError("Euclid witness requires q >= 3");
  if (k == 0) throw PreconditionError("Euclid witness requires k >= 1");
  const Natural qk = Natural::pow(q, k);
  Rational x(qk, qk * q - 1);
  ExpansionQ e = expand(x, q);
  std::vector<Digit> expected(k + 1, 0);
  expected.front() = 1;
  const bool holds = e.preperiod.empty() && e.period == expected &&
                     contains(DigitCantorSet(q, {0, 1}), x);
  return {std::move(x), std::move(e), holds};
}

std::optional<Dependence> mult_dependence(const Natural& p, const Natural& q) {
  if (p < 2 || q < 2) throw PreconditionError("multiplicative dependence needs p, q >= 2");
  const PerfectPower pp = perfect_power(p);
  const PerfectPower qq = perfect_power(q);
  if (pp.root != qq.root) return std::nullopt;
  const std::uint64_t g = gcd(pp.exponent, qq.exponent).to_u64();
  return Dependence{qq.exponent / g, pp.exponent / g};
}

}  // namespace qadic
