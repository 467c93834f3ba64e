#include "betticone/supernatural.hpp"

#include <stdexcept>

namespace betticone {

namespace {

void check_roots(const std::vector<std::int64_t>& roots) {
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (roots[i - 1] <= roots[i]) {
      throw std::invalid_argument("roots must be strictly decreasing");
    }
  }
}

Int root_product(const std::vector<std::int64_t>& roots, std::int64_t k) {
  Int product = 1;
  for (const std::int64_t z : roots) product *= Int(k) - z;
  return product;
}

}  // namespace

Rational integral_rank(const std::vector<std::int64_t>& roots) {
  check_roots(roots);
  const unsigned m = static_cast<unsigned>(roots.size());
  if (m == 0) return 1;
  // The gcd of a degree-m integer polynomial over all of Z equals the gcd
  // of its values at any m+1 consecutive points; above the top root all
  // factors are positive.
  Int g = 0;
  for (std::int64_t k = roots.front() + 1; k <= roots.front() + 1 + m; ++k) {
    g = boost::multiprecision::gcd(g, root_product(roots, k));
  }
  return Rational(factorial(m), g);
}

SupernaturalTable::SupernaturalTable(std::vector<std::int64_t> roots)
    : SupernaturalTable(roots, integral_rank(roots)) {}

SupernaturalTable::SupernaturalTable(std::vector<std::int64_t> roots,
                                     Rational rank)
    : roots_(std::move(roots)), rank_(std::move(rank)) {
  check_roots(roots_);
  if (rank_ <= 0) throw std::invalid_argument("rank must be positive");
}

Rational SupernaturalTable::euler(std::int64_t twist) const {
  return rank_ * root_product(roots_, twist) /
         factorial(static_cast<unsigned>(roots_.size()));
}

std::optional<int> SupernaturalTable::nonzero_row(std::int64_t twist) const {
  const int m = dim();
  // Roots are strictly decreasing, so the twist sits in exactly one open
  // interval (z_{j+1}, z_j) with z_0 = +inf, z_{m+1} = -inf, or on a root.
  int j = 0;
  while (j < m && twist < roots_[static_cast<std::size_t>(j)]) ++j;
  if (j < m && twist == roots_[static_cast<std::size_t>(j)]) {
    return std::nullopt;  // all cohomology vanishes at a root
  }
  return j;
}

Rational SupernaturalTable::gamma(int j, std::int64_t twist) const {
  if (j < 0 || j > dim()) return 0;
  const auto row = nonzero_row(twist);
  if (!row || *row != j) return 0;
  return boost::multiprecision::abs(euler(twist));
}

}  // namespace betticone
