#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace trigroup {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", an integer, or a finite decimal such as "0.38307" or
/// "-1.5e-3" into an exact rational. Decimals are read digit by digit, never
/// through a binary float.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

BigInt floor_of(const Rational& q);
BigInt ceil_of(const Rational& q);

/// Largest integer r with r^k <= x, for x >= 0 and k >= 1.
BigInt integer_root_floor(const BigInt& x, unsigned k);

double to_double(const Rational& q);

}  // namespace trigroup
