#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace vpec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_exact(const Rational& r);

/// Decimal rendering with `digits` significant digits (printf %g style).
std::string to_decimal(const Rational& r, int digits = 12);

/// Parses "p/q" or an integer. Decimal points are rejected.
Rational parse_rational(std::string_view text);

BigInt floor_of(const Rational& r);
bool is_integer(const Rational& r);

}  // namespace vpec
