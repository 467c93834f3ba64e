#pragma once

#include <string>
#include <vector>

#include "betticone/betti_table.hpp"
#include "betticone/degree_sequence.hpp"
#include "betticone/errors.hpp"
#include "betticone/pure_diagram.hpp"

namespace betticone {

struct DecompositionPart {
  // Coefficient against the canonical integer table of the diagram.
  Rational coefficient;
  PureDiagram diagram;

  // The same part expressed against the normalized table.
  Rational normalized_coefficient() const {
    return coefficient * diagram.canonical_scale;
  }
};

// An exact expression source = sum coefficient * canonical table, with the
// degree sequences of the parts forming a strictly increasing chain.
struct Decomposition {
  BettiTable source;
  std::vector<DecompositionPart> parts;
};

// The input table cannot be written as a nonnegative chain combination of
// pure diagrams; the parts peeled off before the failure are attached.
struct NotInConeError : DomainError {
  NotInConeError(const std::string& reason, std::vector<DecompositionPart> done)
      : DomainError("table is not in the cone of Betti tables: " + reason),
        partial(std::move(done)) {}

  std::vector<DecompositionPart> partial;
};

// d_i = min{j : beta_{i,j} > 0} for i = 0..max column. Throws
// ColumnGapError when the nonzero columns are not exactly 0..p, and
// NotIncreasingError when the minima do not increase strictly. The table
// must be nonempty.
DegreeSequence top_degree_sequence(const BettiTable& table);

struct GreedyStep {
  Rational coefficient;
  PureDiagram diagram;
  BettiTable remainder;
};

// Subtracts the largest multiple of the top pure diagram that keeps every
// entry nonnegative. At least one entry at a position (i, d_i) is zeroed,
// so the support shrinks.
GreedyStep greedy_step(const BettiTable& table);

// Runs greedy steps until the table is exhausted. Any step failure is
// rethrown as NotInConeError with the partial decomposition attached.
Decomposition decompose(const BettiTable& table);

struct VerificationReport {
  bool ok = true;
  std::vector<std::string> issues;
};

// Re-checks coefficient positivity, the strict chain condition and exact
// re-summation; collects human-readable diagnostics instead of throwing.
VerificationReport verify_decomposition(const Decomposition& decomposition);

// sum coefficient * canonical table over the parts.
BettiTable reconstruct(const Decomposition& decomposition);

}  // namespace betticone
