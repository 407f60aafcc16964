#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace rbsep {

using BigInt = boost::multiprecision::cpp_int;

// Exact arbitrary-precision fraction. Always kept in lowest terms with a
// positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "12", "-3/4" and decimal notation like "2.125" or "-.5".
// Returns nullopt on anything else (including division by zero).
std::optional<Rational> parse_rational(std::string_view token);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

BigInt floor_to_int(const Rational& r);
BigInt ceil_to_int(const Rational& r);

// base^exp with exact arithmetic; exp may be negative (base must be nonzero).
Rational pow_rational(const Rational& base, int exp);

// Thrown when a combinatorial budget or size guard is exceeded.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rbsep
