#include "betticone/decomposition.hpp"

#include <stdexcept>

namespace betticone {

DegreeSequence top_degree_sequence(const BettiTable& table) {
  if (table.empty()) {
    throw std::invalid_argument("top degree sequence of an empty table");
  }
  const int top = table.max_column();
  std::vector<std::int64_t> minima;
  minima.reserve(static_cast<std::size_t>(top) + 1);
  for (int i = 0; i <= top; ++i) {
    const auto shift = table.min_shift(i);
    if (!shift) {
      throw ColumnGapError("column " + std::to_string(i) +
                           " is empty but column " + std::to_string(top) +
                           " is not");
    }
    minima.push_back(*shift);
  }
  try {
    return DegreeSequence(std::move(minima));
  } catch (const NotIncreasingError&) {
    throw NotIncreasingError(
        "column minima are not strictly increasing; not the table of a "
        "minimal resolution");
  }
}

GreedyStep greedy_step(const BettiTable& table) {
  const DegreeSequence type = top_degree_sequence(table);
  PureDiagram diagram = pure_diagram(type, table.ambient_vars());

  // Largest multiple of the canonical table that keeps the remainder in
  // the nonnegative orthant: the minimum of the entrywise ratios over the
  // diagram support.
  bool first = true;
  Rational coefficient = 0;
  for (const auto& [key, value] : diagram.canonical.entries()) {
    const Rational ratio = table.get(key.first, key.second) / value;
    if (first || ratio < coefficient) {
      coefficient = ratio;
      first = false;
    }
  }

  BettiTable remainder = axpy(table, -coefficient, diagram.canonical);
  return GreedyStep{coefficient, std::move(diagram), std::move(remainder)};
}

Decomposition decompose(const BettiTable& table) {
  Decomposition result{table, {}};
  BettiTable remainder = table;
  const std::size_t step_cap = table.support_size() + 1;

  while (!remainder.empty()) {
    if (result.parts.size() >= step_cap) {
      throw std::logic_error("greedy decomposition failed to terminate");
    }
    GreedyStep step = [&] {
      try {
        return greedy_step(remainder);
      } catch (const DomainError& e) {
        throw NotInConeError(e.what(), std::move(result.parts));
      }
    }();
    result.parts.push_back(
        DecompositionPart{std::move(step.coefficient), std::move(step.diagram)});
    remainder = std::move(step.remainder);
  }

  // Both hold by construction for any input the loop accepts.
  for (std::size_t l = 1; l < result.parts.size(); ++l) {
    if (!sequence_lt(result.parts[l - 1].diagram.type,
                     result.parts[l].diagram.type)) {
      throw std::logic_error("greedy parts out of chain order");
    }
  }
  if (reconstruct(result) != table) {
    throw std::logic_error("greedy parts do not re-sum to the input");
  }
  return result;
}

BettiTable reconstruct(const Decomposition& decomposition) {
  BettiTable sum(decomposition.source.ambient_vars());
  for (const auto& part : decomposition.parts) {
    sum = axpy(sum, part.coefficient, part.diagram.canonical);
  }
  return sum;
}

VerificationReport verify_decomposition(const Decomposition& decomposition) {
  VerificationReport report;
  const auto complain = [&report](std::string text) {
    report.ok = false;
    report.issues.push_back(std::move(text));
  };

  for (std::size_t l = 0; l < decomposition.parts.size(); ++l) {
    const auto& part = decomposition.parts[l];
    if (part.coefficient <= 0) {
      complain("part " + std::to_string(l) + " has nonpositive coefficient " +
               rational_to_string(part.coefficient));
    }
    if (l > 0 && !sequence_lt(decomposition.parts[l - 1].diagram.type,
                              part.diagram.type)) {
      complain("parts " + std::to_string(l - 1) + " and " + std::to_string(l) +
               " are not strictly increasing: " +
               decomposition.parts[l - 1].diagram.type.to_string() + " vs " +
               part.diagram.type.to_string());
    }
  }

  try {
    if (reconstruct(decomposition) != decomposition.source) {
      complain("parts do not re-sum to the source table");
    }
  } catch (const DomainError& e) {
    complain(std::string("parts do not re-sum to the source table: ") +
             e.what());
  }
  return report;
}

}  // namespace betticone
