#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

#include "xmodlie/verdict.hpp"

namespace xmodlie {

/// Exact rational scalar. GMP keeps values canonical after arithmetic:
/// gcd(|num|, den) = 1 and den > 0.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p", "-p" or "p/q" with arbitrary-precision p, q. The result is
/// canonicalized, so "5/15" parses to 1/3. Throws a parse-kind XmodError on
/// malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Renders canonically: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& r);

}  // namespace xmodlie
