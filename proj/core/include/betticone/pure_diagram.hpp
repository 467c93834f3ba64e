#pragma once

#include <vector>

#include "betticone/betti_table.hpp"
#include "betticone/degree_sequence.hpp"

namespace betticone {

// The ray of Betti tables attached to a degree sequence d. The normalized
// table carries beta_{i,d_i} = prod_{j != i} 1/|d_j - d_i|; the canonical
// table is the smallest strictly positive integer point on the ray (its
// entries have collective gcd 1). canonical = canonical_scale * normalized.
struct PureDiagram {
  DegreeSequence type;
  BettiTable normalized;
  BettiTable canonical;
  Rational canonical_scale;
};

// Throws TooLongError when the sequence has more than ambient_vars + 1
// entries.
PureDiagram pure_diagram(const DegreeSequence& type, int ambient_vars);

// The r signed power sums sum_i (-1)^i beta_{i,d_i} d_i^s, s = 0..r-1,
// evaluated on the canonical table. All must vanish: they are the first
// r derivatives at t = 1 of the Hilbert numerator sum (-1)^i beta t^{d_i}.
std::vector<Rational> herzog_kuhl_residuals(const PureDiagram& diagram);

// Checks the exchange identity among the four pure diagrams built from
// sequences a > c differing exactly in positions tau and k:
//
//   (a_k - a_tau) b(a) + (c_k - c_tau) b(c)
//     = (c_k - a_tau) b(b) + (a_k - c_tau) b(b')
//
// where b keeps a_tau and takes c_k, b' keeps c_tau and takes a_k. When a
// is one entry shorter than c (a_k infinite) the reduced identity
// b(a) + (c_k - c_tau) b(c) = (c_k - a_tau) b(b) + b(b') is checked, with
// b' short. Throws BadChainError when the inputs do not fit the pattern.
bool facet_identity_check(const DegreeSequence& a, const DegreeSequence& b,
                          const DegreeSequence& b_prime,
                          const DegreeSequence& c, std::size_t tau,
                          std::size_t k);

}  // namespace betticone
