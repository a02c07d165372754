#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "qadic/cantor.hpp"
#include "qadic/certificates.hpp"
#include "qadic/expansion.hpp"

namespace qadic {

/// One evaluated index of an enumeration. digits is empty when value > 1
/// (outside the expansion domain).
struct EnumerationRow {
  std::vector<std::uint64_t> index;
  Rational value;
  bool member = false;
  std::optional<std::set<Digit>> digits;
};

/// Receives rows in index order while an enumeration runs.
using RowSink = std::function<void(const EnumerationRow&)>;

struct ExceptionalReport {
  enum class Kind { geometric, lattice };

  Kind kind = Kind::geometric;
  Rational alpha;
  std::optional<Rational> ratio;  // geometric only
  std::vector<Natural> primes;    // lattice only
  DigitCantorSet cantor;
  std::vector<std::vector<std::uint64_t>> members;  // sorted
  std::uint64_t exhausted_bound = 0;
  /// False when no prime factor of the ratio's denominator (or of some p_j)
  /// is coprime to q; the set may then be infinite.
  bool finiteness_guaranteed = true;
  /// Exclusion bound covering [k_alpha, inf)^l, when the values have the form
  /// alpha / prod p_j^k_j with gcd(q, prod p_j) = 1.
  std::optional<ExclusionBound> certified_tail;
};

/// {1 <= k <= k_max : alpha ratio^k in K}, 0 < ratio < 1, alpha > 0.
ExceptionalReport exceptional_geometric(const Rational& alpha, const Rational& ratio,
                                        const DigitCantorSet& cantor, std::uint64_t k_max,
                                        const RowSink& sink = {});

/// Tuples k in [0, box]^l with alpha / prod p_j^k_j in K. Every p_j needs a
/// prime factor that does not divide q.
ExceptionalReport exceptional_lattice(const Rational& alpha, const std::vector<Natural>& primes,
                                      const DigitCantorSet& cantor, std::uint64_t box,
                                      const RowSink& sink = {});

/// Members of D_p with denominator dividing p^exp_max that lie in K, ordered by
/// (least e with denominator | p^e, value). One residue per <q>-orbit is tested;
/// orbits that hit K are listed in full. 0 is included iff 0 is in A.
std::vector<Rational> dp_intersection(const Natural& p, const DigitCantorSet& cantor,
                                      std::uint64_t exp_max);

/// Least k* <= k_max such that alpha ratio^k uses every digit 0..q-1 for all
/// k in [k*, k_max]. q >= 3.
std::optional<std::uint64_t> all_digits_onset(const Rational& alpha, const Rational& ratio,
                                              std::uint64_t q, std::uint64_t k_max);

struct EuclidWitness {
  Rational x;
  ExpansionQ expansion;
  bool holds = false;
};

/// x_k = q^k / (q^(k+1) - 1), whose expansion should be (1 0^k)^infinity.
EuclidWitness euclid_witness(std::uint64_t q, std::uint64_t k);

struct Dependence {
  Natural a;
  Natural b;
};

/// Minimal (a, b) with p^a = q^b, if any.
std::optional<Dependence> mult_dependence(const Natural& p, const Natural& q);

}  // namespace qadic
