#pragma once

#include <stdexcept>
#include <string>

namespace qadic {

// A caller-supplied value violates a documented hypothesis (gcd condition,
// digit range, malformed rational, ...). The CLI maps this to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed. Always a defect, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qadic
