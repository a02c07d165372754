#include "qadic/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qadic/io.hpp"
#include "qadic/number_theory.hpp"

namespace qadic::cli {
namespace {

using io::Json;

const char* const kSubcommands[] = {"expand", "member", "gap",     "order",     "stabilize",
                                    "cosets", "witness", "bound",  "certify",   "verify",
                                    "enumerate", "dp",   "euclid", "deps"};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (out.empty()) throw PreconditionError("empty list");
  return out;
}

const std::string& need(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw PreconditionError(std::string("missing required flag --") + flag);
  return *v;
}

Natural natural_flag(const std::optional<std::string>& v, const char* flag) {
  try {
    return Natural::parse(need(v, flag));
  } catch (const PreconditionError& e) {
    throw PreconditionError(std::string("--") + flag + ": " + e.what());
  }
}

std::uint64_t u64_flag(const std::optional<std::string>& v, const char* flag) {
  const Natural n = natural_flag(v, flag);
  if (!n.fits_u64()) throw PreconditionError(std::string("--") + flag + " exceeds 64 bits");
  return n.to_u64();
}

Rational rational_flag(const std::optional<std::string>& v, const char* flag) {
  try {
    return Rational::parse(need(v, flag));
  } catch (const PreconditionError& e) {
    throw PreconditionError(std::string("--") + flag + ": " + e.what());
  }
}

std::vector<Natural> naturals_flag(const std::optional<std::string>& v, const char* flag) {
  std::vector<Natural> out;
  for (const auto& item : split_list(need(v, flag))) out.push_back(natural_flag(item, flag));
  return out;
}

std::vector<Digit> digits_flag(const std::optional<std::string>& v) {
  std::vector<Digit> out;
  for (const Natural& d : naturals_flag(v, "A")) {
    if (!d.fits_u64()) throw PreconditionError("--A: digit out of range");
    out.push_back(d.to_u64());
  }
  return out;
}

DigitCantorSet cantor_flags(const RunConfig& c) {
  return DigitCantorSet(u64_flag(c.q, "q"), digits_flag(c.digits));
}

// A single k is broadcast to every p_j.
std::vector<std::uint64_t> k_tuple_flag(const RunConfig& c, std::size_t l) {
  std::vector<std::uint64_t> ks;
  for (const Natural& k : naturals_flag(c.k, "k")) {
    if (!k.fits_u64()) throw PreconditionError("--k exceeds 64 bits");
    ks.push_back(k.to_u64());
  }
  if (ks.size() == 1 && l > 1) ks.assign(l, ks.front());
  if (ks.size() != l) throw PreconditionError("--k needs one entry per p_j (or a single value)");
  return ks;
}

Json config_json(const RunConfig& c) {
  Json j{{"subcommand", c.subcommand}};
  const std::pair<const char*, const std::optional<std::string>*> fields[] = {
      {"q", &c.q},         {"A", &c.digits}, {"x", &c.x},     {"alpha", &c.alpha},
      {"ratio", &c.ratio}, {"primes", &c.primes}, {"k", &c.k}, {"k-max", &c.k_max},
      {"box", &c.box},     {"exp-max", &c.exp_max}, {"a", &c.a}, {"m", &c.m},
      {"p", &c.p},         {"t", &c.t},      {"h", &c.h},     {"cert", &c.cert},
      {"out", &c.out}};
  for (const auto& [name, value] : fields) {
    if (*value) j[name] = **value;
  }
  j["format"] = c.format;
  if (c.empirical) j["empirical"] = true;
  return j;
}

Rational alpha_flag(const RunConfig& c) { return c.alpha ? rational_flag(c.alpha, "alpha") : Rational(1); }

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

void require_json(const RunConfig& c) {
  if (c.format != "json") {
    throw PreconditionError("--format csv is only available for enumerate and dp");
  }
}

int dispatch(const RunConfig& c, std::ostream& out) {
  const std::string& cmd = c.subcommand;
  if (c.format != "json" && c.format != "csv") {
    throw PreconditionError("--format must be json or csv");
  }
  if (cmd != "enumerate" && cmd != "dp") require_json(c);

  if (cmd == "expand") {
    const Rational x = rational_flag(c.x, "x");
    emit(out, io::to_json(expand(x, u64_flag(c.q, "q"))));
  } else if (cmd == "member") {
    const Rational x = rational_flag(c.x, "x");
    const DigitCantorSet k = cantor_flags(c);
    emit(out, Json{{"x", io::rational(x)}, {"q", k.base()}, {"A", io::digits_json(k)},
                   {"member", contains(k, x)}});
  } else if (cmd == "gap") {
    const DigitCantorSet k = cantor_flags(c);
    const Gap g = largest_gap(k);
    Json j = io::to_json(g);
    j["length"] = io::rational(g.length());
    j["min_point"] = io::rational(min_point(k));
    j["max_point"] = io::rational(max_point(k));
    emit(out, j);
  } else if (cmd == "order") {
    emit(out, Json{{"order", io::natural(mult_order(natural_flag(c.a, "a"), natural_flag(c.m, "m")))}});
  } else if (cmd == "stabilize") {
    const Natural q = natural_flag(c.q, "q");
    if (c.primes) {
      emit(out, io::to_json(product_stabilization(naturals_flag(c.primes, "primes"), q)));
    } else {
      const Natural p = natural_flag(c.p, "p");
      Json j = io::to_json(order_stabilization(p, q));
      if (c.k) {
        j["k"] = io::natural(natural_flag(c.k, "k"));
        j["order"] = io::natural(order_of_prime_power(p, q, natural_flag(c.k, "k")));
      }
      emit(out, j);
    }
  } else if (cmd == "cosets") {
    emit(out, io::to_json(coset_decomposition(natural_flag(c.m, "m"), natural_flag(c.q, "q"))));
  } else if (cmd == "witness") {
    const auto primes = naturals_flag(c.primes, "primes");
    const Natural t = c.t ? natural_flag(c.t, "t") : Natural(1);
    const WitnessSeed seed = witness_seed(t, primes, u64_flag(c.h, "h"), natural_flag(c.q, "q"));
    Json j = io::to_json(c.k ? congruence_witness(seed, k_tuple_flag(c, primes.size()))
                             : congruence_witness(seed, std::vector(primes.size(), seed.k0)));
    emit(out, j);
  } else if (cmd == "bound") {
    const ExclusionBound b = exclusion_bound(alpha_flag(c), cantor_flags(c), naturals_flag(c.primes, "primes"));
    Json j = io::to_json(b);
    if (c.empirical) j["empirical_threshold"] = std::to_string(empirical_threshold(b));
    emit(out, j);
  } else if (cmd == "certify") {
    const auto primes = naturals_flag(c.primes, "primes");
    const ExclusionBound b = exclusion_bound(alpha_flag(c), cantor_flags(c), primes);
    const auto ks = c.k ? k_tuple_flag(c, primes.size()) : std::vector(primes.size(), b.k_alpha);
    emit(out, io::to_json(make_certificate(b, ks)));
  } else if (cmd == "verify") {
    const std::string& path = need(c.cert, "cert");
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read certificate file " + path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw PreconditionError("certificate is not valid JSON: " + std::string(e.what()));
    }
    emit(out, Json{{"valid", verify_certificate(io::certificate_from_json(j))}});
  } else if (cmd == "enumerate") {
    const Rational alpha = alpha_flag(c);
    const DigitCantorSet k = cantor_flags(c);
    const bool csv = c.format == "csv";
    RowSink sink;
    if (csv) {
      sink = [&out](const EnumerationRow& row) { out << io::csv_row(row) << '\n' << std::flush; };
    }
    if (c.ratio) {
      if (csv) out << io::csv_header(1) << '\n';
      const auto report =
          exceptional_geometric(alpha, rational_flag(c.ratio, "ratio"), k, u64_flag(c.k_max, "k-max"), sink);
      if (!csv) emit(out, io::to_json(report));
    } else {
      const auto primes = naturals_flag(c.primes, "primes");
      if (csv) out << io::csv_header(primes.size()) << '\n';
      const auto report = exceptional_lattice(alpha, primes, k, u64_flag(c.box, "box"), sink);
      if (!csv) emit(out, io::to_json(report));
    }
  } else if (cmd == "dp") {
    const DigitCantorSet k = cantor_flags(c);
    const Natural p = natural_flag(c.p, "p");
    const auto members = dp_intersection(p, k, u64_flag(c.exp_max, "exp-max"));
    if (c.format == "csv") {
      out << "value,digit_set\n";
      for (const Rational& x : members) {
        out << x.to_string() << ',' << io::digits_field(digit_set(x, k.base())) << '\n';
      }
    } else {
      Json list = Json::array();
      for (const Rational& x : members) list.push_back(io::rational(x));
      emit(out, Json{{"p", io::natural(p)}, {"q", k.base()}, {"A", io::digits_json(k)},
                     {"exp_max", u64_flag(c.exp_max, "exp-max")}, {"members", list}});
    }
  } else if (cmd == "euclid") {
    const EuclidWitness w = euclid_witness(u64_flag(c.q, "q"), u64_flag(c.k, "k"));
    emit(out, Json{{"x", io::rational(w.x)}, {"expansion", io::to_json(w.expansion)}, {"holds", w.holds}});
  } else if (cmd == "deps") {
    const auto d = mult_dependence(natural_flag(c.p, "p"), natural_flag(c.q, "q"));
    Json j{{"dependent", d.has_value()}};
    if (d) {
      j["a"] = io::natural(d->a);
      j["b"] = io::natural(d->b);
    }
    emit(out, j);
  } else {
    throw PreconditionError("unknown subcommand '" + cmd + "'");
  }
  return kOk;
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code) {
  RunConfig c;
  CLI::App app{"Exact q-adic expansions, restricted-digit Cantor sets and exclusion certificates",
               "qadic"};
  app.require_subcommand(1);
  app.add_option("--out", c.out, "Write the output document to this file");
  app.add_option("--format", c.format, "json (default) or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--emit-config", c.emit_config, "Print the parsed configuration and exit");

  auto option = [](CLI::App* sub, const char* name, std::optional<std::string>& target,
                   const char* help) { sub->add_option(name, target, help); };
  for (const char* name : kSubcommands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->fallthrough();
    sub->callback([&c, name] { c.subcommand = name; });
    const std::string n = name;
    if (n == "expand" || n == "member") option(sub, "--x", c.x, "Rational s/t");
    if (n != "order" && n != "verify") option(sub, "--q", c.q, "Radix q");
    if (n == "member" || n == "gap" || n == "bound" || n == "certify" || n == "enumerate" || n == "dp") {
      option(sub, "--A", c.digits, "Digit set, comma separated");
    }
    if (n == "bound" || n == "certify" || n == "enumerate") option(sub, "--alpha", c.alpha, "Rational alpha (default 1)");
    if (n == "enumerate") {
      option(sub, "--ratio", c.ratio, "Ratio r in (0,1)");
      option(sub, "--k-max", c.k_max, "Largest k");
      option(sub, "--box", c.box, "Largest exponent per coordinate");
    }
    if (n == "stabilize" || n == "witness" || n == "bound" || n == "certify" || n == "enumerate") {
      option(sub, "--primes", c.primes, "Comma separated p_j");
    }
    if (n == "stabilize" || n == "witness" || n == "certify" || n == "euclid") {
      option(sub, "--k", c.k, "Exponent k (or comma separated tuple)");
    }
    if (n == "order") option(sub, "--a", c.a, "Base a");
    if (n == "order" || n == "cosets") option(sub, "--m", c.m, "Modulus m");
    if (n == "stabilize" || n == "dp" || n == "deps") option(sub, "--p", c.p, "p");
    if (n == "witness") {
      option(sub, "--t", c.t, "t (default 1)");
      option(sub, "--h", c.h, "h");
    }
    if (n == "verify") option(sub, "--cert", c.cert, "Certificate JSON file");
    if (n == "dp") option(sub, "--exp-max", c.exp_max, "Largest exponent of p");
    if (n == "bound") sub->add_flag("--empirical", c.empirical, "Also search for the observed threshold");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    exit_code = code == 0 ? kOk : kPrecondition;
    return std::nullopt;
  }
  exit_code = kOk;
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.emit_config) {
      emit(out, config_json(config));
      return kOk;
    }
    if (config.out) {
      // Buffered so a failed run leaves no partial file behind.
      std::ostringstream buffer;
      const int code = dispatch(config, buffer);
      std::ofstream file(*config.out);
      if (!file || !(file << buffer.str())) throw PreconditionError("cannot write output file " + *config.out);
      return code;
    }
    return dispatch(config, out);
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  int code = kOk;
  const auto config = parse_args(argc, argv, out, err, code);
  if (!config) return code;
  return run(*config, out, err);
}

}  // namespace qadic::cli
