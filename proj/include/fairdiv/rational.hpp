#ifndef FAIRDIV_RATIONAL_HPP
#define FAIRDIV_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fairdiv {

// All probabilities, utilities, weights and expectations are exact
// fractions over arbitrary-precision integers. boost::multiprecision
// keeps them in lowest terms with a positive denominator, which is
// exactly the representation the file format requires.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" with optional leading '-' on p. Anything else
// (floats, exponents, whitespace, a zero denominator) is a ParseError.
Rational parse_rational(std::string_view text);

// Inverse of parse_rational: "p/q", or just "p" when q == 1.
std::string format_rational(const Rational& value);

// Lossy double rendering for display; never used in the exact engine.
double approx(const Rational& value);

} // namespace fairdiv

#endif
