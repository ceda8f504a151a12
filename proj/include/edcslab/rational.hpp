#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace edcslab {

/// Exact arbitrary-precision rational. Every inequality the library reports
/// is decided in this type; floating point never enters a comparison.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parse a non-negative decimal literal ("0.5", "1", ".25") into an exact
/// rational. Throws std::invalid_argument on anything else.
Rational rational_from_decimal(const std::string& text);

/// Smallest integer >= x.
BigInt rational_ceil(const Rational& x);

/// "p/q" in lowest terms, or just "p" when q == 1.
std::string to_string(const Rational& x);

}  // namespace edcslab
