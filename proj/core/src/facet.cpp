#include "betticone/facet.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

#include "betticone/errors.hpp"
#include "betticone/pure_diagram.hpp"

namespace betticone {

namespace {

std::optional<std::int64_t> padded(const DegreeSequence& d, std::size_t i) {
  if (i < d.length()) return d[i];
  return std::nullopt;
}

void require_chain(const ChainTriple& chain) {
  if (!sequence_lt(chain.b, chain.a) || !sequence_lt(chain.c, chain.b)) {
    throw BadChainError("sequences must satisfy a > b > c");
  }
}

// Positions where a and c disagree in the infinity-padded view. c is the
// longer sequence (it is the smallest of the chain).
std::vector<std::size_t> difference_positions(const DegreeSequence& a,
                                              const DegreeSequence& c) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < c.length(); ++i) {
    const auto ai = padded(a, i);
    if (!ai || *ai != c[i]) positions.push_back(i);
  }
  return positions;
}

struct TwoPositionPattern {
  std::size_t tau;
};

// Validates the outer-facet shape: a and c differ exactly at tau, tau+1
// with a_tau >= c_{tau+1}, and b takes c_tau at tau and a_{tau+1} at
// tau+1 (so the chain is saturated there).
TwoPositionPattern analyze_two_position(const ChainTriple& chain,
                                        std::size_t tau) {
  const auto& [a, b, c] = chain;
  if (padded(a, tau) && *padded(a, tau) < c[tau + 1]) {
    throw BadChainError("not an outer facet: a_tau < c_{tau+1}");
  }
  for (std::size_t i = 0; i < c.length(); ++i) {
    const auto want = (i == tau)       ? std::optional<std::int64_t>(c[tau])
                      : (i == tau + 1) ? padded(a, i)
                                       : std::optional<std::int64_t>(c[i]);
    if (padded(b, i) != want) {
      throw BadChainError(
          "b must take c's value at tau and a's value at tau+1");
    }
  }
  if (b.length() != (padded(a, tau + 1) ? c.length() : tau + 1)) {
    throw BadChainError("b has the wrong length for the chain");
  }
  return TwoPositionPattern{tau};
}

}  // namespace

std::int64_t FacetFunctional::coordinate_degree() const {
  if (kind_ != Kind::Coordinate) {
    throw std::logic_error("not a coordinate functional");
  }
  return coordinate_degree_;
}

const SupernaturalTable& FacetFunctional::sheaf() const {
  if (kind_ != Kind::TruncatedPairing) {
    throw std::logic_error("not a truncated-pairing functional");
  }
  return *sheaf_;
}

std::int64_t FacetFunctional::kappa() const {
  if (kind_ != Kind::TruncatedPairing) {
    throw std::logic_error("not a truncated-pairing functional");
  }
  return kappa_;
}

Rational FacetFunctional::evaluate(const BettiTable& table) const {
  if (kind_ == Kind::Coordinate) {
    return table.get(tau_, coordinate_degree_);
  }
  return truncated_pairing(table, *sheaf_, TruncationSpec{tau_, kappa_});
}

ChainTriple normalize_chain(const ChainTriple& chain) {
  require_chain(chain);
  const auto positions = difference_positions(chain.a, chain.c);
  if (positions.size() != 2 || positions[1] != positions[0] + 1) {
    throw BadChainError(
        "endpoints must differ in exactly two consecutive positions");
  }
  const std::size_t tau = positions[0];
  analyze_two_position(chain, tau);

  const std::int64_t v = chain.c[tau + 1];
  const auto rebuild = [&](std::int64_t at_tau, std::int64_t after_tau) {
    std::vector<std::int64_t> out(chain.c.degrees());
    out[tau] = at_tau;
    out[tau + 1] = after_tau;
    try {
      return DegreeSequence(std::move(out));
    } catch (const NotIncreasingError&) {
      throw BadChainError("replacement produces an invalid degree sequence");
    }
  };
  return ChainTriple{rebuild(v, v + 1), rebuild(v - 1, v + 1),
                     rebuild(v - 1, v)};
}

FacetFunctional facet_functional(const ChainTriple& chain, int ambient_vars) {
  require_chain(chain);
  if (chain.c.top_index() > static_cast<std::size_t>(ambient_vars)) {
    throw TooLongError("chain sequences exceed the ambient variable count");
  }

  const auto positions = difference_positions(chain.a, chain.c);

  FacetFunctional functional(chain);

  if (positions.size() == 1) {
    // One differing position: the facet is cut out by the coordinate at
    // (tau, b_tau).
    const std::size_t tau = positions[0];
    const auto b_tau = padded(chain.b, tau);
    if (!b_tau) throw BadChainError("b ends before the differing position");
    for (std::size_t i = 0; i < chain.c.length(); ++i) {
      if (i == tau) continue;
      if (padded(chain.b, i) != padded(chain.c, i)) {
        throw BadChainError("b may differ from the endpoints only at tau");
      }
    }
    functional.kind_ = FacetFunctional::Kind::Coordinate;
    functional.tau_ = static_cast<int>(tau);
    functional.coordinate_degree_ = *b_tau;
  } else if (positions.size() == 2 && positions[1] == positions[0] + 1) {
    const std::size_t tau = positions[0];
    analyze_two_position(chain, tau);

    const ChainTriple standard = normalize_chain(chain);
    const std::size_t r = standard.c.top_index();

    // Root sequence: negated entries of the standard middle sequence with
    // slots tau and tau+1 removed. The middle sequence increases, so the
    // negated entries come out strictly decreasing as required.
    std::vector<std::int64_t> roots;
    roots.reserve(r - 1);
    for (std::size_t i = 0; i <= r; ++i) {
      if (i == tau || i == tau + 1) continue;
      roots.push_back(-standard.b[i]);
    }

    functional.kind_ = FacetFunctional::Kind::TruncatedPairing;
    functional.tau_ = static_cast<int>(tau);
    functional.sheaf_.emplace(std::move(roots));
    functional.kappa_ = standard.c[tau + 1] - 1;
  } else {
    throw BadChainError(
        "endpoints must differ in one position or two consecutive positions");
  }

  // The three defining conditions, checked on the normalized diagrams of
  // the provenance chain itself.
  const auto value = [&](const DegreeSequence& d) {
    return functional.evaluate(pure_diagram(d, ambient_vars).normalized);
  };
  if (value(chain.a) != 0 || value(chain.c) != 0 || value(chain.b) <= 0) {
    throw std::logic_error(
        "facet functional construction failed its defining evaluations");
  }
  return functional;
}

}  // namespace betticone
