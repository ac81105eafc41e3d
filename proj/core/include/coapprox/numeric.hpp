#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coapprox {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always normalized: gcd(|num|, den) = 1, den > 0.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", an integer, or a decimal ("-3.25", "1e-3") into an exact
/// rational. Decimals become exact decimal fractions. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is one.
std::string rational_to_string(const Rational& value);

double to_double(const Rational& value);

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double value);

/// Smallest-denominator rational within |value - p/q| <= tol
/// (Stern-Brocot / continued-fraction walk). tol <= 0 gives the exact
/// dyadic value.
Rational snap_to_rational(double value, double tol);

/// Exact square root when the argument is a perfect square in Q.
std::optional<Rational> exact_sqrt(const Rational& value);

std::string format_double(double value);  // 17 significant digits

}  // namespace coapprox
