#pragma once

#include <cstdint>
#include <optional>

#include "betticone/betti_table.hpp"
#include "betticone/degree_sequence.hpp"
#include "betticone/pairing.hpp"
#include "betticone/supernatural.hpp"

namespace betticone {

// Three degree sequences with a > b > c, consecutive in a chain. Input to
// the facet-functional construction.
struct ChainTriple {
  DegreeSequence a;
  DegreeSequence b;
  DegreeSequence c;
};

// A linear functional on Betti tables that vanishes on the pure diagrams
// of a and c (and everything beyond them in a chain) and is strictly
// positive on the pure diagram of b. Two shapes occur:
//   - Coordinate: beta -> beta_{tau, b_tau}, when a and c differ in one
//     position;
//   - TruncatedPairing: beta -> <beta, gamma(sheaf)>_{tau, kappa}, when a
//     and c differ in two consecutive positions.
class FacetFunctional {
 public:
  enum class Kind { Coordinate, TruncatedPairing };

  Kind kind() const { return kind_; }
  int tau() const { return tau_; }
  const ChainTriple& provenance() const { return provenance_; }

  // Kind::Coordinate only.
  std::int64_t coordinate_degree() const;

  // Kind::TruncatedPairing only.
  const SupernaturalTable& sheaf() const;
  std::int64_t kappa() const;

  Rational evaluate(const BettiTable& table) const;

 private:
  friend FacetFunctional facet_functional(const ChainTriple&, int);

  explicit FacetFunctional(ChainTriple provenance)
      : kind_(Kind::Coordinate), provenance_(std::move(provenance)) {}

  Kind kind_;
  ChainTriple provenance_;
  int tau_ = 0;
  std::int64_t coordinate_degree_ = 0;
  std::optional<SupernaturalTable> sheaf_;
  std::int64_t kappa_ = 0;
};

// Replaces a triple whose endpoints differ in two consecutive positions
// tau, tau+1 by the standard one with slot values (v, v+1), (v-1, v+1),
// (v-1, v) where v = c_{tau+1}, keeping the common prefix and tail. The
// functional derived from the replacement also certifies the original
// facet. Throws BadChainError when the difference pattern or the
// outer-face inequality a_tau >= c_{tau+1} fails.
ChainTriple normalize_chain(const ChainTriple& chain);

// Builds the facet functional certifying that dropping b from a chain
// through a > b > c lands on the boundary of the cone. For the
// two-position pattern the sheaf lives on P^{r-1} (r = top index of the
// normalized c), has roots (-b_0, ..., -b_{tau-1}, -b_{tau+2}, ..., -b_r)
// read from the normalized middle sequence, and the cutoff is
// kappa = c_{tau+1} - 1. Construction evaluates the functional on the
// normalized diagrams of a, b, c and insists on (0, >0, 0).
FacetFunctional facet_functional(const ChainTriple& chain, int ambient_vars);

}  // namespace betticone
