#include "qadic/io.hpp"

namespace qadic::io {
namespace {

Json string_list(const std::vector<Natural>& xs) {
  Json out = Json::array();
  for (const Natural& x : xs) out.push_back(x.to_string());
  return out;
}

Json digit_array(const std::vector<Digit>& ds) {
  Json out = Json::array();
  for (Digit d : ds) out.push_back(d);
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw PreconditionError(std::string("certificate is missing field '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

Json natural(const Natural& n) {
  if (n.fits_u64()) return n.to_u64();
  return n.to_string();
}

Json natural_string(const Natural& n) { return n.to_string(); }

Json rational(const Rational& x) { return x.to_string(); }

Natural parse_natural(const Json& j) {
  if (j.is_number_unsigned()) return Natural(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return Natural(j.get<std::int64_t>());
  if (j.is_string()) return Natural::parse(j.get<std::string>());
  throw PreconditionError("expected a natural number, got " + j.dump());
}

Rational parse_rational(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  return Rational(parse_natural(j));
}

Json to_json(const ExpansionQ& e) {
  return Json{{"base", e.base}, {"preperiod", digit_array(e.preperiod)}, {"period", digit_array(e.period)}};
}

Json to_json(const Gap& g) {
  return Json{{"left", rational(g.left)}, {"right", rational(g.right)}};
}

Json digits_json(const DigitCantorSet& k) { return digit_array(k.digits()); }

Json to_json(const OrderStabilization& s) {
  return Json{{"p", natural(s.p)},     {"q", natural(s.q)}, {"k0", natural(s.k0)},
              {"d_k0", natural(s.d_k0)}, {"b", natural(s.b)}};
}

Json to_json(const ProductStabilization& s) {
  Json thresholds = Json::array();
  for (const Natural& k : s.thresholds) thresholds.push_back(natural(k));
  return Json{{"n0", natural(s.n0)},
              {"smallest_checked", natural(s.smallest_checked)},
              {"thresholds", thresholds}};
}

Json to_json(const CosetDecomposition& c) {
  Json reps = Json::array();
  for (const Natural& r : c.representatives) reps.push_back(natural(r));
  return Json{{"modulus", natural(c.modulus)},
              {"generator", natural(c.generator)},
              {"orbit_size", natural(c.orbit_size)},
              {"representatives", reps}};
}

Json to_json(const CongruenceWitness& w) {
  Json ks = Json::array();
  for (std::uint64_t k : w.k_tuple) ks.push_back(std::to_string(k));
  return Json{{"q", natural_string(w.q)},
              {"t", natural_string(w.t)},
              {"primes", string_list(w.primes)},
              {"h", std::to_string(w.h)},
              {"b", natural_string(w.b)},
              {"k0", std::to_string(w.k0)},
              {"exponent_n", natural_string(w.exponent_n)},
              {"k_tuple", ks}};
}

Json to_json(const ExclusionBound& b) {
  return Json{{"alpha", rational(b.alpha)},
              {"q", std::to_string(b.cantor.base())},
              {"A", digits_json(b.cantor)},
              {"primes", string_list(b.primes)},
              {"h", std::to_string(b.h)},
              {"gap", to_json(b.gap)},
              {"p_hat", natural_string(b.p_hat)},
              {"b_hat", natural_string(b.b_hat)},
              {"m", natural_string(b.m)},
              {"k_alpha", std::to_string(b.k_alpha)},
              {"reduction_r", std::to_string(b.reduction_r)},
              {"alpha_hat", rational(b.alpha_hat)},
              {"b", natural_string(b.b)},
              {"k0", std::to_string(b.k0)}};
}

Json to_json(const ExclusionCertificate& c) {
  return Json{{"format", "qadic-exclusion-certificate"},
              {"version", "1"},
              {"value", rational(c.value)},
              {"q", std::to_string(c.cantor.base())},
              {"A", digits_json(c.cantor)},
              {"exponent_N", natural_string(c.exponent_N)},
              {"shifted_residue", rational(c.shifted_residue)},
              {"gap", to_json(c.gap)}};
}

Json to_json(const ExceptionalReport& r) {
  const bool geometric = r.kind == ExceptionalReport::Kind::geometric;
  Json members = Json::array();
  for (const auto& idx : r.members) {
    if (geometric) {
      members.push_back(idx.front());
    } else {
      members.push_back(idx);
    }
  }
  Json out{{"kind", geometric ? "geometric" : "lattice"}, {"alpha", rational(r.alpha)}};
  if (geometric) {
    out["ratio"] = rational(*r.ratio);
  } else {
    out["primes"] = string_list(r.primes);
  }
  out["q"] = r.cantor.base();
  out["A"] = digits_json(r.cantor);
  out["exhausted_bound"] = r.exhausted_bound;
  out["finiteness_guaranteed"] = r.finiteness_guaranteed;
  out["members"] = members;
  out["certified_tail"] = r.certified_tail ? to_json(*r.certified_tail) : Json(nullptr);
  return out;
}

ExclusionCertificate certificate_from_json(const Json& j) {
  try {
    if (field(j, "format") != "qadic-exclusion-certificate") {
      throw PreconditionError("not an exclusion certificate");
    }
    std::vector<Digit> digits;
    for (const Json& d : field(j, "A")) digits.push_back(parse_natural(d).to_u64());
    const Json& gap = field(j, "gap");
    return {parse_rational(field(j, "value")),
            DigitCantorSet(parse_natural(field(j, "q")).to_u64(), std::move(digits)),
            parse_natural(field(j, "exponent_N")),
            parse_rational(field(j, "shifted_residue")),
            Gap{parse_rational(field(gap, "left")), parse_rational(field(gap, "right"))}};
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed certificate: ") + e.what());
  }
}

std::string digits_field(const std::set<Digit>& digits) {
  std::string out;
  for (Digit d : digits) {
    if (!out.empty()) out += ' ';
    out += std::to_string(d);
  }
  return out;
}

std::string csv_header(std::size_t index_columns) {
  std::string out;
  if (index_columns == 1) {
    out = "index";
  } else {
    for (std::size_t i = 0; i < index_columns; ++i) out += (i ? ",k" : "k") + std::to_string(i + 1);
  }
  return out + ",value,member,digit_set";
}

std::string csv_row(const EnumerationRow& row) {
  std::string out;
  for (std::size_t i = 0; i < row.index.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(row.index[i]);
  }
  out += ',' + row.value.to_string() + ',' + (row.member ? "true" : "false") + ',';
  if (row.digits) out += digits_field(*row.digits);
  return out;
}

}  // namespace qadic::io
