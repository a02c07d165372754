#pragma once

#include <string>
#include <vector>

#include "qadic/natural.hpp"
#include "qadic/rational.hpp"

namespace testing_helpers {

inline qadic::Rational R(const char* text) { return qadic::Rational::parse(text); }

inline qadic::Rational R(std::uint64_t s, std::uint64_t t) {
  return qadic::Rational(qadic::Natural(s), qadic::Natural(t));
}

inline std::vector<qadic::Natural> naturals(std::initializer_list<std::uint64_t> values) {
  return {values.begin(), values.end()};
}

}  // namespace testing_helpers
