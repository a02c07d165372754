#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qadic/cantor.hpp"
#include "qadic/certificates.hpp"
#include "qadic/enumeration.hpp"
#include "qadic/expansion.hpp"
#include "qadic/orders.hpp"

namespace qadic::io {

using Json = nlohmann::ordered_json;

/// Integer when it fits in 64 bits, decimal string otherwise.
Json natural(const Natural& n);
/// Always a decimal string.
Json natural_string(const Natural& n);
Json rational(const Rational& x);

Natural parse_natural(const Json& j);
Rational parse_rational(const Json& j);

Json to_json(const ExpansionQ& e);
Json to_json(const Gap& g);
Json digits_json(const DigitCantorSet& k);
Json to_json(const OrderStabilization& s);
Json to_json(const ProductStabilization& s);
Json to_json(const CosetDecomposition& c);
Json to_json(const CongruenceWitness& w);
Json to_json(const ExclusionBound& b);
Json to_json(const ExclusionCertificate& c);
Json to_json(const ExceptionalReport& r);

/// Certificate files are self-contained: every number is an exact string, the
/// digit set a sorted array. Throws PreconditionError on malformed input.
ExclusionCertificate certificate_from_json(const Json& j);

/// "0 1 2"
std::string digits_field(const std::set<Digit>& digits);
std::string csv_header(std::size_t index_columns);
std::string csv_row(const EnumerationRow& row);

}  // namespace qadic::io
