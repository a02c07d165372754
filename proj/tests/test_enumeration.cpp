#include <doctest.h>

#include <cstdlib>

#include "qadic/cantor.hpp"
#include "qadic/enumeration.hpp"
#include "qadic/errors.hpp"
#include "qadic/number_theory.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace qadic;
using testing_helpers::naturals;
using testing_helpers::R;
using Index = std::vector<std::uint64_t>;

namespace {

bool oracle_member(const DigitCantorSet& k, const Rational& x) {
  if (Rational(1) < x) return false;
  const auto verdict = oracle::member_by_digit_search(x.num().mpz(), x.den().mpz(), k.base(), k.digits());
  REQUIRE(verdict.has_value());
  return *verdict;
}

std::vector<Index> geometric_by_oracle(const Rational& alpha, const Rational& ratio,
                                       const DigitCantorSet& k, std::uint64_t k_max) {
  std::vector<Index> out;
  for (std::uint64_t i = 1; i <= k_max; ++i) {
    if (oracle_member(k, alpha * pow(ratio, i))) out.push_back({i});
  }
  return out;
}

std::vector<Rational> dp_by_scan(std::uint64_t p, const DigitCantorSet& k, std::uint64_t exp_max) {
  std::set<Rational> seen;
  std::vector<Rational> out;
  std::uint64_t d = 1;
  for (std::uint64_t e = 0; e <= exp_max; ++e, d *= p) {
    for (std::uint64_t a = 0; a < d; ++a) {
      const Rational x = R(a, d);
      if (seen.insert(x).second && contains(k, x)) out.push_back(x);
    }
  }
  return out;
}

class ThreadsOverride {
 public:
  explicit ThreadsOverride(const char* value) {
    if (const char* old = std::getenv("QADIC_THREADS")) saved_ = old;
    setenv("QADIC_THREADS", value, 1);
  }
  ~ThreadsOverride() {
    if (saved_) {
      setenv("QADIC_THREADS", saved_->c_str(), 1);
    } else {
      unsetenv("QADIC_THREADS");
    }
  }

 private:
  std::optional<std::string> saved_;
};

}  // namespace

TEST_CASE("exceptional_geometric: 2^-k in the base-3 set without digit 2") {
  const DigitCantorSet k(3, {0, 1});
  const ExceptionalReport r = exceptional_geometric(1, R("1/2"), k, 200);
  CHECK(r.members == geometric_by_oracle(1, R("1/2"), k, 200));
  CHECK(std::find(r.members.begin(), r.members.end(), Index{1}) != r.members.end());
  CHECK(std::find(r.members.begin(), r.members.end(), Index{3}) != r.members.end());
  CHECK(std::find(r.members.begin(), r.members.end(), Index{2}) == r.members.end());
  CHECK(r.finiteness_guaranteed);
  REQUIRE(r.certified_tail.has_value());
  for (const Index& m : r.members) CHECK(m[0] < r.certified_tail->k_alpha);
  CHECK(r.exhausted_bound == 200);
}

TEST_CASE("exceptional_geometric: hypothesis violated for 3^-k in base 3") {
  const ExceptionalReport r = exceptional_geometric(1, R("1/3"), DigitCantorSet(3, {0, 1}), 50);
  CHECK(r.members.size() == 50);
  CHECK_FALSE(r.finiteness_guaranteed);
  CHECK_FALSE(r.certified_tail.has_value());
}

TEST_CASE("exceptional_geometric rejects bad parameters") {
  CHECK_THROWS_AS(DigitCantorSet(3, {0, 1, 2}), PreconditionError);
  CHECK_THROWS_AS(exceptional_geometric(1, R("1"), DigitCantorSet(3, {0, 1}), 5), PreconditionError);
  CHECK_THROWS_AS(exceptional_geometric(1, R("0"), DigitCantorSet(3, {0, 1}), 5), PreconditionError);
  CHECK_THROWS_AS(exceptional_geometric(0, R("1/2"), DigitCantorSet(3, {0, 1}), 5), PreconditionError);
}

TEST_CASE("exceptional_geometric streams rows in order") {
  std::vector<std::uint64_t> indices;
  std::vector<bool> flags;
  const ExceptionalReport r = exceptional_geometric(
      R("3/5"), R("2/7"), DigitCantorSet(5, {0, 1, 3}), 60, [&](const EnumerationRow& row) {
        indices.push_back(row.index[0]);
        flags.push_back(row.member);
      });
  REQUIRE(indices.size() == 60);
  for (std::size_t i = 0; i < indices.size(); ++i) CHECK(indices[i] == i + 1);
  std::vector<Index> from_rows;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) from_rows.push_back({indices[i]});
  }
  CHECK(from_rows == r.members);
}

TEST_CASE("property: geometric enumeration matches the oracle") {
  const std::vector<std::tuple<Rational, Rational, DigitCantorSet>> cases{
      {1, R("1/2"), DigitCantorSet(3, {0, 2})},
      {1, R("1/2"), DigitCantorSet(3, {1, 2})},
      {R("3/5"), R("2/7"), DigitCantorSet(5, {0, 1, 3})},
      {R("7"), R("1/4"), DigitCantorSet(3, {0, 1})},
      {1, R("1/5"), DigitCantorSet(10, {0, 1, 2, 3, 4, 5, 6, 7, 8})},
      {R("1/3"), R("2/3"), DigitCantorSet(3, {0, 2})},
      {1, R("1/9"), DigitCantorSet(3, {0, 1})},
  };
  for (const auto& [alpha, ratio, k] : cases) {
    CHECK(exceptional_geometric(alpha, ratio, k, 120).members == geometric_by_oracle(alpha, ratio, k, 120));
  }
}

TEST_CASE("property: results do not depend on the worker count") {
  const DigitCantorSet k(3, {0, 1});
  std::vector<Index> serial;
  {
    ThreadsOverride one("1");
    serial = exceptional_lattice(1, naturals({2, 5}), k, 10).members;
  }
  ThreadsOverride many("7");
  CHECK(exceptional_lattice(1, naturals({2, 5}), k, 10).members == serial);
}

TEST_CASE("exceptional_lattice examples") {
  const DigitCantorSet k(3, {0, 1});
  const ExceptionalReport one = exceptional_lattice(1, naturals({2}), k, 60);
  std::vector<Index> geometric = exceptional_geometric(1, R("1/2"), k, 60).members;
  // The lattice also looks at k = 0, where the value 1 needs digit 2.
  CHECK(one.members == geometric);

  const ExceptionalReport two = exceptional_lattice(1, naturals({2, 5}), k, 8);
  std::vector<Index> scan;
  for (std::uint64_t a = 0; a <= 8; ++a) {
    for (std::uint64_t b = 0; b <= 8; ++b) {
      const Rational x(1, Natural::pow(2, a) * Natural::pow(5, b));
      if (oracle_member(k, x)) scan.push_back({a, b});
    }
  }
  CHECK(two.members == scan);
  CHECK(two.certified_tail.has_value());

  CHECK_THROWS_AS(exceptional_lattice(0, naturals({2}), k, 5), PreconditionError);
  CHECK_THROWS_AS(exceptional_lattice(1, naturals({2, 2}), k, 5), PreconditionError);
  CHECK_THROWS_AS(exceptional_lattice(1, naturals({9}), k, 5), PreconditionError);
  CHECK_THROWS_AS(exceptional_lattice(1, naturals({1}), k, 5), PreconditionError);
}

TEST_CASE("exceptional_lattice accepts p_j with some prime outside q") {
  // 6 shares 3 with q but keeps the prime 2.
  const DigitCantorSet k(3, {0, 2});
  const ExceptionalReport r = exceptional_lattice(1, naturals({6}), k, 40);
  for (std::uint64_t i = 0; i <= 40; ++i) {
    const bool listed = std::find(r.members.begin(), r.members.end(), Index{i}) != r.members.end();
    CHECK(listed == oracle_member(k, Rational(1, Natural::pow(6, i))));
  }
  CHECK_FALSE(r.certified_tail.has_value());
}

TEST_CASE("dp_intersection examples") {
  const auto with_02 = dp_intersection(2, DigitCantorSet(3, {0, 2}), 6);
  CHECK(std::find(with_02.begin(), with_02.end(), R("3/4")) != with_02.end());
  CHECK(with_02 == dp_by_scan(2, DigitCantorSet(3, {0, 2}), 6));

  const auto with_01 = dp_intersection(2, DigitCantorSet(3, {0, 1}), 6);
  CHECK(std::find(with_01.begin(), with_01.end(), R("1/2")) != with_01.end());
  CHECK(std::find(with_01.begin(), with_01.end(), R("1/8")) != with_01.end());

  CHECK_NOTHROW(dp_intersection(10, DigitCantorSet(3, {0, 2}), 3));
  CHECK_THROWS_AS(dp_intersection(3, DigitCantorSet(3, {0, 2}), 3), PreconditionError);
  CHECK_THROWS_AS(dp_intersection(1, DigitCantorSet(3, {0, 2}), 3), PreconditionError);
}

TEST_CASE("dp_intersection includes 0 exactly when 0 is a digit") {
  CHECK(dp_intersection(2, DigitCantorSet(3, {0, 1}), 3).front() == R("0"));
  const auto no_zero = dp_intersection(2, DigitCantorSet(3, {1, 2}), 5);
  CHECK(std::find(no_zero.begin(), no_zero.end(), R("0")) == no_zero.end());
}

TEST_CASE("property: coset-pruned dp_intersection equals the full scan") {
  for (std::uint64_t p = 2; p <= 10; ++p) {
    for (std::uint64_t q = 3; q <= 7; ++q) {
      if (oracle::gcd(p, q) != 1) continue;
      std::uint64_t exp_max = 0;
      for (std::uint64_t d = 1; exp_max < 6 && d * p <= 30000; d *= p) ++exp_max;
      for (const auto& digits : {std::vector<Digit>{0, q - 1}, std::vector<Digit>{0, 1},
                                 std::vector<Digit>{1, q - 1}}) {
        const DigitCantorSet k(q, digits);
        REQUIRE_MESSAGE(dp_intersection(p, k, exp_max) == dp_by_scan(p, k, exp_max), "p=", p, " q=", q);
      }
    }
  }
}

TEST_CASE("all_digits_onset examples") {
  const auto onset = all_digits_onset(1, R("1/2"), 3, 100);
  REQUIRE(onset.has_value());
  for (std::uint64_t k = *onset; k <= 100; ++k) {
    CHECK(digit_set(pow(R("1/2"), k), 3).size() == 3);
  }
  if (*onset > 1) CHECK(digit_set(pow(R("1/2"), *onset - 1), 3).size() < 3);
  CHECK_THROWS_AS(all_digits_onset(1, R("1/2"), 2, 100), PreconditionError);
  CHECK_FALSE(all_digits_onset(1, R("1/3"), 3, 100).has_value());
}

TEST_CASE("euclid_witness examples") {
  const EuclidWitness a = euclid_witness(3, 1);
  CHECK(a.x == R("3/8"));
  CHECK(a.expansion.period == std::vector<Digit>{1, 0});
  CHECK(a.holds);
  CHECK(euclid_witness(3, 2).x == R("9/26"));
  CHECK(euclid_witness(3, 2).expansion.period == std::vector<Digit>{1, 0, 0});
  CHECK(euclid_witness(10, 1).x == R("10/99"));
  CHECK_THROWS_AS(euclid_witness(2, 1), PreconditionError);
}

TEST_CASE("property: Euclid witnesses are (1 0^k) repeating and lie in K(q,{0,1})") {
  for (std::uint64_t q = 3; q <= 10; ++q) {
    for (std::uint64_t k = 1; k <= 10; ++k) {
      const EuclidWitness w = euclid_witness(q, k);
      std::vector<Digit> period(k + 1, 0);
      period[0] = 1;
      const auto reference = oracle::long_division(w.x.num().mpz(), w.x.den().mpz(), q);
      CHECK(reference.preperiod.empty());
      CHECK(reference.period == period);
      CHECK(w.holds);
      CHECK(contains(DigitCantorSet(q, {0, 1}), w.x));
    }
  }
}

TEST_CASE("mult_dependence examples") {
  const auto a = mult_dependence(8, 4);
  REQUIRE(a.has_value());
  CHECK(a->a == Natural(2));
  CHECK(a->b == Natural(3));
  const auto same = mult_dependence(12, 12);
  REQUIRE(same.has_value());
  CHECK(same->a == Natural(1));
  CHECK(same->b == Natural(1));
  CHECK_FALSE(mult_dependence(2, 3).has_value());
  CHECK_FALSE(mult_dependence(12, 18).has_value());
  CHECK_THROWS_AS(mult_dependence(1, 3), PreconditionError);
}

TEST_CASE("property: dependence on a prime base gives infinitely many members") {
  for (std::uint64_t q : {3, 5, 7}) {
    for (std::uint64_t p = 2; p <= 400; ++p) {
      const auto dep = mult_dependence(p, q);
      std::uint64_t power = q;
      while (power < p) power *= q;
      CHECK(dep.has_value() == (power == p));
      if (!dep) continue;
      CHECK(Natural::pow(p, dep->a.to_u64()) == Natural::pow(q, dep->b.to_u64()));
      for (const auto& digits : {std::vector<Digit>{0, 1}, std::vector<Digit>{0, q - 1}}) {
        const ExceptionalReport r = exceptional_geometric(1, Rational(1, p), DigitCantorSet(q, digits), 50);
        CHECK(r.members.size() == 50);
      }
    }
  }
}
