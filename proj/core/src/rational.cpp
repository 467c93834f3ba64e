#include "betticone/rational.hpp"

#include <stdexcept>

namespace betticone {

Int int_pow(const Int& base, unsigned exponent) {
  Int result = 1;
  Int b = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

Int factorial(unsigned n) {
  Int result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

Int binomial(const Int& top, unsigned bottom) {
  if (top < bottom) return 0;
  Int result = 1;
  for (unsigned i = 0; i < bottom; ++i) {
    result *= top - i;
    result /= i + 1;  // exact: the running product of i+1 consecutive ints
  }
  return result;
}

std::string rational_to_string(const Rational& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed rational: '" + std::string(text) +
                                 "'");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw bad();
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw bad();
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw bad();
    }
    return Int(std::string(part));
  };
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw bad();
  return Rational(num, den);
}

}  // namespace betticone
