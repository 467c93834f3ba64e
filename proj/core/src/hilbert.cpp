#include "betticone/hilbert.hpp"

#include <sstream>

#include "betticone/decomposition.hpp"
#include "betticone/errors.hpp"
#include "betticone/pure_diagram.hpp"

namespace betticone {

HilbertNumerator::HilbertNumerator(const BettiTable& table)
    : ambient_vars_(table.ambient_vars()) {
  for (const auto& [key, value] : table.entries()) {
    const auto [i, j] = key;
    auto& coefficient = coefficients_[j];
    coefficient += (i % 2 == 0) ? value : -value;
    if (coefficient == 0) coefficients_.erase(j);
  }
}

HilbertNumerator::HilbertNumerator(std::map<std::int64_t, Rational> coeffs,
                                   int vars)
    : coefficients_(std::move(coeffs)), ambient_vars_(vars) {}

Rational HilbertNumerator::coefficient(std::int64_t degree) const {
  const auto it = coefficients_.find(degree);
  return it == coefficients_.end() ? Rational(0) : it->second;
}

Rational HilbertNumerator::at_one() const {
  Rational sum = 0;
  for (const auto& [degree, value] : coefficients_) sum += value;
  return sum;
}

namespace {

// One exact division by (1-t): with N = sum a_j t^j and Q = sum b_j t^j,
// (1-t) Q = N forces b_j = a_j + b_{j-1}, and divisibility means the
// running sum returns to zero past the top degree.
std::optional<std::map<std::int64_t, Rational>> divide_once(
    const std::map<std::int64_t, Rational>& coeffs) {
  std::map<std::int64_t, Rational> quotient;
  const std::int64_t lo = coeffs.begin()->first;
  const std::int64_t hi = coeffs.rbegin()->first;
  Rational carry = 0;
  for (std::int64_t j = lo; j <= hi; ++j) {
    const auto it = coeffs.find(j);
    carry += it == coeffs.end() ? Rational(0) : it->second;
    if (carry != 0) quotient[j] = carry;
  }
  if (carry != 0) return std::nullopt;  // remainder
  return quotient;
}

}  // namespace

int HilbertNumerator::vanishing_order_at_one() const {
  if (is_zero()) {
    throw InvalidTableError("the zero numerator vanishes to every order");
  }
  int order = 0;
  auto coeffs = coefficients_;
  while (true) {
    auto quotient = divide_once(coeffs);
    if (!quotient) return order;
    coeffs = std::move(*quotient);
    ++order;
    if (coeffs.empty()) {
      throw std::logic_error("nonzero polynomial deflated to zero");
    }
  }
}

HilbertNumerator HilbertNumerator::deflated(int order) const {
  auto coeffs = coefficients_;
  for (int step = 0; step < order; ++step) {
    if (coeffs.empty()) {
      throw InvalidTableError("cannot deflate the zero numerator");
    }
    auto quotient = divide_once(coeffs);
    if (!quotient) {
      throw InvalidTableError("numerator is not divisible by (1-t)^" +
                              std::to_string(order));
    }
    coeffs = std::move(*quotient);
  }
  return HilbertNumerator(std::move(coeffs), ambient_vars_);
}

std::string HilbertNumerator::to_string() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [degree, value] : coefficients_) {
    const bool negative = value < 0;
    const Rational magnitude = negative ? Rational(-value) : value;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const bool unit = magnitude == 1 && degree != 0;
    if (!unit) out << rational_to_string(magnitude);
    if (degree != 0) {
      if (!unit) out << "*";
      out << "t";
      if (degree != 1) out << "^" << degree;
    }
  }
  return out.str();
}

int codimension(const BettiTable& table) {
  return HilbertNumerator(table).vanishing_order_at_one();
}

Rational multiplicity(const BettiTable& table) {
  const HilbertNumerator numerator(table);
  const int order = numerator.vanishing_order_at_one();
  return numerator.deflated(order).at_one();
}

Rational hilbert_function(const BettiTable& table, std::int64_t degree) {
  const unsigned n = static_cast<unsigned>(table.ambient_vars());
  Rational sum = 0;
  for (const auto& [key, value] : table.entries()) {
    const auto [i, j] = key;
    const Int count = binomial(Int(degree) - j + n - 1, n - 1);
    if (count == 0) continue;
    sum += (i % 2 == 0 ? value : -value) * count;
  }
  return sum;
}

ShiftBounds shift_bounds(const BettiTable& table) {
  ShiftBounds bounds;
  bounds.projective_dimension = table.max_column();
  bounds.codim = codimension(table);
  for (int i = 0; i <= bounds.projective_dimension; ++i) {
    const auto lo = table.min_shift(i);
    if (!lo) {
      throw ColumnGapError("column " + std::to_string(i) + " is empty");
    }
    bounds.minimal.push_back(*lo);
    if (i <= bounds.codim) bounds.maximal.push_back(*table.max_shift(i));
  }
  return bounds;
}

BoundsReport multiplicity_bounds_check(const BettiTable& table,
                                       std::optional<std::int64_t> window) {
  if (table.get(0, 0) == 0) {
    throw NotDegreeZeroError("table has no entry at (0, 0)");
  }

  // Decomposability is the entry ticket; it also settles the equality
  // classification below.
  const Decomposition decomposition = decompose(table);

  BoundsReport report;
  const ShiftBounds bounds = shift_bounds(table);
  if (bounds.minimal.front() != 0) {
    throw NotDegreeZeroError("table is not generated in degree 0");
  }
  report.projective_dimension = bounds.projective_dimension;
  report.codim = bounds.codim;
  report.minimal_shifts = bounds.minimal;
  report.maximal_shifts = bounds.maximal;
  report.decomposition_parts = decomposition.parts.size();
  report.pure = table.is_pure();

  const Rational degree_zero = table.get(0, 0);
  report.multiplicity_value = multiplicity(table);
  Rational shift_product = 1;
  for (std::size_t i = 1; i < bounds.maximal.size(); ++i) {
    shift_product *= bounds.maximal[i];
  }
  report.multiplicity_bound =
      degree_zero * shift_product /
      factorial(static_cast<unsigned>(bounds.codim));
  report.bound_holds = report.multiplicity_value <= report.multiplicity_bound;
  report.bound_equality =
      report.multiplicity_value == report.multiplicity_bound;

  // Coefficientwise series comparison on a finite window. Both bounding
  // series are pure-diagram series over the same ambient ring, scaled so
  // the degree-0 coefficient is 1.
  const int n = table.ambient_vars();
  report.window =
      window.value_or(table.max_internal_degree() + 2 * std::int64_t{n});

  const DegreeSequence lower_type(bounds.minimal);
  const DegreeSequence upper_type(bounds.maximal);
  const BettiTable lower_diagram = pure_diagram(lower_type, n).normalized;
  const BettiTable upper_diagram = pure_diagram(upper_type, n).normalized;
  Rational lower_scale = 1, upper_scale = 1;
  for (std::size_t i = 1; i < bounds.minimal.size(); ++i) {
    lower_scale *= bounds.minimal[i];
  }
  for (std::size_t i = 1; i < bounds.maximal.size(); ++i) {
    upper_scale *= bounds.maximal[i];
  }

  report.series_lower_holds = true;
  report.series_upper_holds = true;
  for (std::int64_t k = 0; k <= report.window; ++k) {
    const Rational middle = hilbert_function(table, k) / degree_zero;
    if (lower_scale * hilbert_function(lower_diagram, k) > middle) {
      report.series_lower_holds = false;
    }
    if (middle > upper_scale * hilbert_function(upper_diagram, k)) {
      report.series_upper_holds = false;
    }
  }
  return report;
}

}  // namespace betticone
