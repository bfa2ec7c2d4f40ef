#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace kvlab {

// Exact rational scalar. GMP keeps every value in lowest terms with a
// positive denominator; zero is 0/1.
using Rational = boost::multiprecision::mpq_rational;

using RatVector = std::vector<Rational>;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

// Accepts "p", "p/q", optional leading '-' or '+'. Whitespace, decimal
// points, exponents and NaN/Inf tokens are rejected with ParseError;
// a zero denominator throws ValueError.
Rational parse_rational(std::string_view text);

bool is_zero(const RatVector& v);

}  // namespace kvlab
