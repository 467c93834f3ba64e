#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "betticone/rational.hpp"

namespace betticone {

// A monomial ideal in n variables, held as the minimal generating set of
// exponent vectors (an antichain under componentwise divisibility, kept
// sorted for determinism).
class MonomialIdeal {
 public:
  MonomialIdeal(int vars, std::vector<std::vector<int>> generators);

  int vars() const { return vars_; }
  const std::vector<std::vector<int>>& generators() const {
    return generators_;
  }
  bool trivial() const { return generators_.empty(); }  // the zero ideal

  // Some generator divides x^exponent.
  bool contains(const std::vector<int>& exponent) const;

  // Componentwise maximum of the generators (all zero for no generators).
  std::vector<int> lcm_exponents() const;

  int max_generator_degree() const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int vars_;
  std::vector<std::vector<int>> generators_;
};

// Parses "x^2,x*y,x*z^2" against the given variable names. Monomials are
// '*'-separated products of tokens `name` or `name^exp`.
MonomialIdeal parse_monomial_ideal(std::string_view generators,
                                   const std::vector<std::string>& var_names);

// Deterministic sampler: up to max_generators random monomials of total
// degree 1..max_total_degree, minimalized.
MonomialIdeal random_ideal(std::uint64_t seed, int vars, int max_generators,
                           int max_total_degree);

// Number of degree-k monomials outside the ideal, by direct enumeration.
// Throws TooLargeError when the search space is unreasonable.
Int standard_monomial_count(const MonomialIdeal& ideal, std::int64_t degree);

}  // namespace betticone
