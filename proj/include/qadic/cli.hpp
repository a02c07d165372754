#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qadic::cli {

/// Parsed command line. Every numeric parameter stays a string until run()
/// parses it, so malformed values are reported before any computation.
struct RunConfig {
  std::string subcommand;
  std::optional<std::string> q, digits, x, alpha, ratio, primes, k, k_max, box, exp_max;
  std::optional<std::string> a, m, p, t, h, cert;
  std::optional<std::string> out;
  std::string format = "json";
  bool emit_config = false;
  bool empirical = false;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kPrecondition = 2;

/// Parses argv. On failure (or --help) returns nothing and sets exit_code.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code);

/// Executes the subcommand; writes the document to out (or to --out).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qadic::cli
