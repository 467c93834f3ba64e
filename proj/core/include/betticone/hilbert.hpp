#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "betticone/betti_table.hpp"

namespace betticone {

// The Laurent polynomial N(t) = sum_{i,j} (-1)^i beta_{i,j} t^j, the
// numerator of the Hilbert series H(t) = N(t) / (1-t)^n.
class HilbertNumerator {
 public:
  explicit HilbertNumerator(const BettiTable& table);

  int ambient_vars() const { return ambient_vars_; }
  const std::map<std::int64_t, Rational>& coefficients() const {
    return coefficients_;
  }
  bool is_zero() const { return coefficients_.empty(); }

  Rational coefficient(std::int64_t degree) const;
  Rational at_one() const;

  // Order of vanishing at t = 1; throws InvalidTableError for the zero
  // polynomial.
  int vanishing_order_at_one() const;

  // Exact division by (1-t)^order; throws InvalidTableError when the
  // division leaves a remainder.
  HilbertNumerator deflated(int order) const;

  std::string to_string() const;  // e.g. "1 - 2*t^2 + 2*t^4 - t^5"

 private:
  HilbertNumerator(std::map<std::int64_t, Rational> coeffs, int vars);

  std::map<std::int64_t, Rational> coefficients_;
  int ambient_vars_;
};

inline HilbertNumerator hilbert_numerator(const BettiTable& table) {
  return HilbertNumerator(table);
}

// Vanishing order of the numerator at t = 1 (the codimension of a module
// with this table).
int codimension(const BettiTable& table);

// Q(1) for N(t) = (1-t)^s Q(t) with s the vanishing order: the
// multiplicity of the top-dimensional part.
Rational multiplicity(const BettiTable& table);

// sum_i (-1)^i sum_j beta_{i,j} * binom(k - j + n - 1, n - 1) with the
// combinatorial binomial. Integer-valued on integer tables; rational in
// general.
Rational hilbert_function(const BettiTable& table, std::int64_t degree);

// Minimal and maximal shifts of a table. minimal has one entry per column
// 0..r (r = projective dimension); maximal is cut at the codimension s.
struct ShiftBounds {
  std::vector<std::int64_t> minimal;
  std::vector<std::int64_t> maximal;
  int projective_dimension = 0;
  int codim = 0;
};

ShiftBounds shift_bounds(const BettiTable& table);

struct BoundsReport {
  int projective_dimension = 0;
  int codim = 0;
  std::vector<std::int64_t> minimal_shifts;
  std::vector<std::int64_t> maximal_shifts;

  Rational multiplicity_value;
  Rational multiplicity_bound;  // beta_{0,0} * b_1...b_s / s!
  bool bound_holds = false;
  bool bound_equality = false;

  bool pure = false;
  std::size_t decomposition_parts = 0;

  // Coefficientwise Hilbert series comparison on degrees 0..window:
  //   (prod a_i) H(b(a)) <= H(table)/beta_{0,0} <= (prod b_i) H(b(b)).
  std::int64_t window = 0;
  bool series_lower_holds = false;
  bool series_upper_holds = false;
};

// Requires a table with an entry at (0, 0) (NotDegreeZeroError otherwise)
// that decomposes (NotInConeError propagates). The default window is
// max shift + 2n.
BoundsReport multiplicity_bounds_check(
    const BettiTable& table, std::optional<std::int64_t> window = {});

}  // namespace betticone
