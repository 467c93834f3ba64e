#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace betticone {

// All arithmetic in the library is exact. Int/Rational are arbitrary
// precision; Rational is kept in lowest terms with positive denominator
// by the backend.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int int_pow(const Int& base, unsigned exponent);
Int factorial(unsigned n);

// Combinatorial binomial coefficient: zero whenever top < bottom,
// including negative top.
Int binomial(const Int& top, unsigned bottom);

// "n/d" with the denominator omitted when it is 1.
std::string rational_to_string(const Rational& value);

// Accepts "5", "-5" and "num/den" forms. Throws std::invalid_argument on
// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace betticone
