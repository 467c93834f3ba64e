#pragma once

#include "betticone/betti_table.hpp"
#include "betticone/monomial_ideal.hpp"

namespace betticone {

struct KoszulOptions {
  int max_vars = 5;
  int max_total_degree = 8;
  // 0 = one worker per hardware thread (capped); 1 = sequential.
  unsigned threads = 0;
};

// Minimal graded Betti table of S/I for a monomial ideal I, computed from
// scratch: for every multidegree b below the generator lcm, the Koszul
// complex of the variables restricted to degree b is a complex of
// Q-vector spaces with basis the squarefree subsets tau of supp(b) such
// that x^{b-tau} lies outside I; its homology ranks, summed over
// multidegrees of total degree j, give beta_{i,j}. Independent
// multidegrees may be evaluated concurrently; the result does not depend
// on the schedule. Throws TooLargeError when the configured bounds are
// exceeded.
BettiTable koszul_betti_table(const MonomialIdeal& ideal,
                              const KoszulOptions& options = {});

}  // namespace betticone
