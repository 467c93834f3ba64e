#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "betticone/rational.hpp"

namespace betticone {

// Cohomology table of a supernatural sheaf on P^m, stored symbolically as
// the strictly decreasing integral roots z_1 > ... > z_m of its Euler
// polynomial together with a positive rank scale:
//
//   euler(k) = (rank / m!) * prod_j (k - z_j).
//
// For each twist k at most one cohomology row is nonzero:
//   gamma_{0,k} != 0 iff k > z_1,
//   gamma_{j,k} != 0 iff z_j > k > z_{j+1},
//   gamma_{m,k} != 0 iff z_m > k,
// and the nonzero value is |euler(k)|. Every row vanishes at the roots.
class SupernaturalTable {
 public:
  // Uses integral_rank(roots) as the scale.
  explicit SupernaturalTable(std::vector<std::int64_t> roots);
  SupernaturalTable(std::vector<std::int64_t> roots, Rational rank);

  int dim() const { return static_cast<int>(roots_.size()); }  // m
  const std::vector<std::int64_t>& roots() const { return roots_; }
  const Rational& rank() const { return rank_; }

  Rational euler(std::int64_t twist) const;

  // gamma_{j,twist}; zero for j outside [0, m].
  Rational gamma(int j, std::int64_t twist) const;

  // The unique row that can be nonzero at this twist, if any.
  std::optional<int> nonzero_row(std::int64_t twist) const;

  bool operator==(const SupernaturalTable&) const = default;

 private:
  std::vector<std::int64_t> roots_;  // strictly decreasing
  Rational rank_;
};

// The scale m!/g, where g is the gcd of prod_j (k - z_j) over all integers
// k. It makes every euler value an integer and the nonzero values of the
// table collectively coprime.
Rational integral_rank(const std::vector<std::int64_t>& roots);

}  // namespace betticone
