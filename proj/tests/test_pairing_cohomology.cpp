#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "betticone/errors.hpp"
#include "betticone/facet.hpp"
#include "betticone/koszul.hpp"
#include "betticone/monomial_ideal.hpp"
#include "betticone/pairing.hpp"
#include "betticone/pure_diagram.hpp"
#include "betticone/supernatural.hpp"
#include "test_util.hpp"

using namespace betticone;
using testutil::make_table;
using testutil::random_sequence;

namespace {

std::vector<std::int64_t> random_roots(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<std::int64_t> value(-6, 6);
  std::vector<std::int64_t> roots;
  while (static_cast<int>(roots.size()) < m) {
    const std::int64_t candidate = value(rng);
    if (std::find(roots.begin(), roots.end(), candidate) == roots.end()) {
      roots.push_back(candidate);
    }
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace

TEST_CASE("integral rank normalization") {
  CHECK(integral_rank({0, -4}) == 2);
  CHECK(integral_rank({-1, -2}) == 1);  // chi(k) = (k+1)(k+2)/2
  CHECK(integral_rank({0}) == 1);
  CHECK(integral_rank({}) == 1);
  CHECK_THROWS_AS(integral_rank({1, 5}), std::invalid_argument);
}

TEST_CASE("gamma values of the roots-(0,-4) table") {
  const SupernaturalTable sheaf({0, -4}, Rational(2));
  CHECK(sheaf.rank() == 2);
  CHECK(sheaf.euler(-2) == -4);  // chi(k) = k(k+4)

  CHECK(sheaf.gamma(1, -2) == 4);
  CHECK(sheaf.gamma(1, -1) == 3);
  CHECK(sheaf.gamma(1, -3) == 3);

  // Vanishing at the roots, on every row.
  for (int j = 0; j <= 2; ++j) {
    CHECK(sheaf.gamma(j, 0) == 0);
    CHECK(sheaf.gamma(j, -4) == 0);
  }

  CHECK(sheaf.gamma(2, -5) == 5);
  CHECK(sheaf.gamma(2, -6) == 12);
  CHECK(sheaf.gamma(2, -7) == 21);
  CHECK(sheaf.gamma(0, 1) == 5);
  CHECK(sheaf.gamma(0, 3) == 21);

  // Out-of-range rows are zero rather than errors.
  CHECK(sheaf.gamma(3, -9) == 0);
  CHECK(sheaf.gamma(-1, 2) == 0);
}

TEST_CASE("default rank comes from the integral normalization") {
  const SupernaturalTable sheaf({-1, -2});
  CHECK(sheaf.rank() == 1);
  CHECK(sheaf.euler(0) == 1);
  CHECK(sheaf.gamma(0, 0) == 1);
}

TEST_CASE("natural cohomology and the euler identity") {
  std::mt19937_64 rng(701);
  std::uniform_int_distribution<int> dim(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const SupernaturalTable sheaf(random_roots(rng, dim(rng)));
    for (std::int64_t k = -10; k <= 10; ++k) {
      int nonzero_rows = 0;
      Rational alternating = 0;
      for (int j = 0; j <= sheaf.dim(); ++j) {
        const Rational g = sheaf.gamma(j, k);
        REQUIRE(g >= 0);
        if (g != 0) ++nonzero_rows;
        alternating += (j % 2 == 0) ? g : -g;
      }
      CHECK(nonzero_rows <= 1);
      CHECK(alternating == sheaf.euler(k));
    }
  }
}

TEST_CASE("pairing against a single generator reads off gamma") {
  const BettiTable unit = make_table(1, {{0, 0, "1"}});
  const SupernaturalTable wide({3, -1}, Rational(7, 2));
  CHECK(pairing(unit, wide) == wide.gamma(0, 0));

  const SupernaturalTable standard({-1, -2});
  CHECK(pairing(unit, standard) == 1);
}

TEST_CASE("pairing of the middle ray table is zero, truncation keeps 12") {
  // The doubled integer point on the (0,1,3,4) ray.
  const BettiTable middle = make_table(
      4, {{0, 0, "2"}, {1, 1, "4"}, {2, 3, "4"}, {3, 4, "2"}});
  const SupernaturalTable sheaf({0, -4}, Rational(2));

  // Exhaustive signed sum: +4*gamma_{1,-1} - 4*gamma_{1,-3} = 12 - 12.
  CHECK(pairing(middle, sheaf) == 0);

  const TruncationSpec cutoff{1, 1};
  CHECK(truncated_pairing(middle, sheaf, cutoff) == 12);

  // The chain endpoints are annihilated by the truncated functional.
  const BettiTable upper = make_table(
      4, {{0, 0, "1"}, {1, 2, "6"}, {2, 3, "8"}, {3, 4, "3"}});
  const BettiTable lower = make_table(
      4, {{0, 0, "3"}, {1, 1, "8"}, {2, 2, "6"}, {3, 4, "1"}});
  CHECK(truncated_pairing(upper, sheaf, cutoff) == 0);
  CHECK(truncated_pairing(lower, sheaf, cutoff) == 0);
}

TEST_CASE("no cutoff and large tau reduce to the plain pairing") {
  const BettiTable table = testutil::worked_example_table();
  const SupernaturalTable sheaf({2, 0, -3});
  const TruncationSpec wide_open{7, std::nullopt};
  CHECK(truncated_pairing(table, sheaf, wide_open) == pairing(table, sheaf));
}

TEST_CASE("pairing profile agrees with the direct sums") {
  std::mt19937_64 rng(702);
  std::uniform_int_distribution<int> dim(0, 3);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const BettiTable table = koszul_betti_table(
        random_ideal(4200 + seed, 1 + static_cast<int>(seed % 4), 5, 4));
    const SupernaturalTable sheaf(random_roots(rng, dim(rng)));
    const PairingProfile profile(table, sheaf);
    CHECK(profile.full() == pairing(table, sheaf));
    for (int tau = 0; tau <= 5; ++tau) {
      for (std::int64_t kappa = table.min_internal_degree() - 2;
           kappa <= table.max_internal_degree() + 2; ++kappa) {
        const TruncationSpec spec{tau, kappa};
        CHECK(profile.truncated(spec) == truncated_pairing(table, sheaf, spec));
      }
      const TruncationSpec open_spec{tau, std::nullopt};
      CHECK(profile.truncated(open_spec) ==
            truncated_pairing(table, sheaf, open_spec));
    }
  }
}

TEST_CASE("positivity on oracle resolutions") {
  std::mt19937_64 rng(703);
  std::uniform_int_distribution<int> dim(0, 3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const BettiTable table = koszul_betti_table(
        random_ideal(4300 + seed, 1 + static_cast<int>(seed % 4), 5, 4));
    for (int s = 0; s < 5; ++s) {
      const SupernaturalTable sheaf(random_roots(rng, dim(rng)));
      const PairingProfile profile(table, sheaf);
      CHECK(profile.full() >= 0);
      for (int tau = 0; tau <= 4; ++tau) {
        for (std::int64_t kappa = table.min_internal_degree() - 2;
             kappa <= table.max_internal_degree() + 2; ++kappa) {
          CHECK(profile.truncated(TruncationSpec{tau, kappa}) >= 0);
        }
      }
    }
  }
}

TEST_CASE("chain normalization follows the slot replacement") {
  // Endpoints with infinite slots: (0,inf,inf) > (0,1,inf) > (0,1,3).
  const ChainTriple padded{DegreeSequence({0}), DegreeSequence({0, 1}),
                           DegreeSequence({0, 1, 3})};
  const ChainTriple replaced = normalize_chain(padded);
  CHECK(replaced.a == DegreeSequence({0, 3, 4}));
  CHECK(replaced.b == DegreeSequence({0, 2, 4}));
  CHECK(replaced.c == DegreeSequence({0, 2, 3}));

  // A triple already in standard position is its own replacement.
  const ChainTriple standard{DegreeSequence({0, 3, 4}), DegreeSequence({0, 2, 4}),
                             DegreeSequence({0, 2, 3})};
  const ChainTriple same = normalize_chain(standard);
  CHECK(same.a == standard.a);
  CHECK(same.b == standard.b);
  CHECK(same.c == standard.c);

  // The worked chain happens to be standard as well.
  const ChainTriple worked{DegreeSequence({0, 2, 3, 4}),
                           DegreeSequence({0, 1, 3, 4}),
                           DegreeSequence({0, 1, 2, 4})};
  const ChainTriple unchanged = normalize_chain(worked);
  CHECK(unchanged.a == worked.a);
  CHECK(unchanged.b == worked.b);
  CHECK(unchanged.c == worked.c);
}

TEST_CASE("facet functional for the two-position worked chain") {
  const ChainTriple chain{DegreeSequence({0, 2, 3, 4}),
                          DegreeSequence({0, 1, 3, 4}),
                          DegreeSequence({0, 1, 2, 4})};
  const FacetFunctional functional = facet_functional(chain, 4);
  REQUIRE(functional.kind() == FacetFunctional::Kind::TruncatedPairing);
  CHECK(functional.sheaf().roots() == std::vector<std::int64_t>({0, -4}));
  CHECK(functional.sheaf().rank() == 2);
  CHECK(functional.tau() == 1);
  CHECK(functional.kappa() == 1);

  const auto canonical_of = [](const DegreeSequence& d) {
    return pure_diagram(d, 4).canonical;
  };
  CHECK(functional.evaluate(canonical_of(chain.a)) == 0);
  CHECK(functional.evaluate(canonical_of(chain.c)) == 0);
  CHECK(functional.evaluate(canonical_of(chain.b)) == 6);
  const BettiTable doubled = make_table(
      4, {{0, 0, "2"}, {1, 1, "4"}, {2, 3, "4"}, {3, 4, "2"}});
  CHECK(functional.evaluate(doubled) == 12);
}

TEST_CASE("facet functional for one-position chains is a coordinate") {
  const ChainTriple chain{DegreeSequence({0, 3, 4}), DegreeSequence({0, 2, 4}),
                          DegreeSequence({0, 1, 4})};
  const FacetFunctional functional = facet_functional(chain, 3);
  REQUIRE(functional.kind() == FacetFunctional::Kind::Coordinate);
  CHECK(functional.tau() == 1);
  CHECK(functional.coordinate_degree() == 2);

  CHECK(functional.evaluate(pure_diagram(chain.b, 3).canonical) > 0);
  CHECK(functional.evaluate(pure_diagram(chain.a, 3).canonical) == 0);
  CHECK(functional.evaluate(pure_diagram(chain.c, 3).canonical) == 0);
}

TEST_CASE("facet functional rejects bad chains") {
  const DegreeSequence d({0, 2, 4});
  CHECK_THROWS_AS(facet_functional(ChainTriple{d, d, d}, 3), BadChainError);

  // Three differing positions.
  CHECK_THROWS_AS(
      facet_functional(ChainTriple{DegreeSequence({0, 4, 6, 8}),
                                   DegreeSequence({0, 3, 5, 8}),
                                   DegreeSequence({0, 2, 3, 5})},
                       4),
      BadChainError);

  // Two consecutive positions but an interior face: a_tau < c_{tau+1}.
  CHECK_THROWS_AS(
      facet_functional(ChainTriple{DegreeSequence({0, 2, 4}),
                                   DegreeSequence({0, 1, 4}),
                                   DegreeSequence({0, 1, 3})},
                       3),
      BadChainError);
}

TEST_CASE("truncated functional coefficients match the known grid") {
  // Coefficients of the worked facet functional, read off by evaluating on
  // unit tables. Rows are indexed by k - i, columns by i.
  const ChainTriple chain{DegreeSequence({0, 2, 3, 4}),
                          DegreeSequence({0, 1, 3, 4}),
                          DegreeSequence({0, 1, 2, 4})};
  const FacetFunctional functional = facet_functional(chain, 4);

  const std::vector<std::vector<std::int64_t>> grid{
      {21, -12, 5, 0, -3},  // row k - i = -3
      {12, -5, 0, 3, -4},   // row -2
      {5, 0, -3, 4, -3},    // row -1
      {0, 3, -4, 3, 0},     // row 0
      {0, 0, 0, 0, 5},      // row 1
      {0, 0, 0, 0, 12},     // row 2
  };
  for (std::size_t row = 0; row < grid.size(); ++row) {
    const std::int64_t shift = static_cast<std::int64_t>(row) - 3;
    for (int i = 0; i <= 4; ++i) {
      BettiTable unit(4);
      unit.set(i, shift + i, Rational(1));
      CHECK(functional.evaluate(unit) ==
            Rational(grid[row][static_cast<std::size_t>(i)]));
    }
  }
}

TEST_CASE("facet certificates vanish along chain extensions") {
  std::mt19937_64 rng(909);
  std::uniform_int_distribution<std::size_t> length_dist(2, 5);
  std::uniform_int_distribution<int> step(0, 2);
  int built = 0;
  while (built < 40) {
    const std::size_t length = length_dist(rng);
    const DegreeSequence c = random_sequence(rng, length, -3, 6);
    const std::size_t r = c.top_index();
    const int vars = static_cast<int>(r) + 1;

    // Assemble a valid triple, one- or two-position.
    std::optional<ChainTriple> chain;
    if (rng() % 2 == 0) {
      std::uniform_int_distribution<std::size_t> tau_dist(0, r);
      const std::size_t tau = tau_dist(rng);
      const std::int64_t cap = (tau + 1 <= r) ? c[tau + 1] : c[tau] + 4;
      if (cap - c[tau] >= 3) {
        std::vector<std::int64_t> upper(c.degrees()), middle(c.degrees());
        upper[tau] = c[tau] + 2 +
                     static_cast<std::int64_t>(
                         rng() % static_cast<std::uint64_t>(cap - c[tau] - 2));
        middle[tau] = c[tau] + 1 +
                      static_cast<std::int64_t>(
                          rng() %
                          static_cast<std::uint64_t>(upper[tau] - c[tau] - 1));
        chain = ChainTriple{DegreeSequence(upper), DegreeSequence(middle),
                            DegreeSequence(c.degrees())};
      }
    } else if (r >= 1) {
      std::uniform_int_distribution<std::size_t> tau_dist(0, r - 1);
      const std::size_t tau = tau_dist(rng);
      const std::int64_t cap = (tau + 2 <= r) ? c[tau + 2] : c[tau + 1] + 3;
      // Outer-facet shape: a_tau >= c_{tau+1} and a_{tau+1} < cap.
      if (cap - c[tau + 1] >= 2) {
        std::vector<std::int64_t> upper(c.degrees()), middle(c.degrees());
        upper[tau] = c[tau + 1];
        upper[tau + 1] =
            c[tau + 1] + 1 +
            static_cast<std::int64_t>(
                rng() % static_cast<std::uint64_t>(cap - c[tau + 1] - 1));
        middle[tau] = c[tau];
        middle[tau + 1] = upper[tau + 1];
        chain = ChainTriple{DegreeSequence(upper), DegreeSequence(middle),
                            DegreeSequence(c.degrees())};
      }
    }
    if (!chain) continue;

    // Construction already asserts (0, >0, 0) on the triple itself.
    const FacetFunctional functional = facet_functional(*chain, vars + 1);
    ++built;

    // Pure diagrams above a: raise entries from the right, maybe truncate.
    std::vector<std::int64_t> above(chain->a.degrees());
    above[r] += step(rng);
    for (std::size_t i = r; i-- > 0;) {
      above[i] = std::min(above[i + 1] - 1, above[i] + step(rng));
    }
    std::uniform_int_distribution<std::size_t> keep_dist(1, above.size());
    above.resize(keep_dist(rng));
    const DegreeSequence d_above(above);
    REQUIRE(sequence_le(chain->a, d_above));
    CHECK(functional.evaluate(pure_diagram(d_above, vars + 1).normalized) ==
          0);

    // Pure diagrams below c: lower entries from the left, maybe extend.
    std::vector<std::int64_t> below(chain->c.degrees());
    below[0] -= step(rng);
    for (std::size_t i = 1; i <= r; ++i) {
      below[i] = std::max(below[i - 1] + 1, below[i] - step(rng));
    }
    if (rng() % 2 == 0) below.push_back(below.back() + 1 + step(rng));
    const DegreeSequence d_below(below);
    REQUIRE(sequence_le(d_below, chain->c));
    CHECK(functional.evaluate(pure_diagram(d_below, vars + 1).normalized) ==
          0);
  }
}

TEST_CASE("facet functional with padded endpoints certifies the original") {
  const ChainTriple padded{DegreeSequence({0}), DegreeSequence({0, 1}),
                           DegreeSequence({0, 1, 3})};
  const FacetFunctional functional = facet_functional(padded, 3);
  REQUIRE(functional.kind() == FacetFunctional::Kind::TruncatedPairing);
  CHECK(functional.sheaf().roots() == std::vector<std::int64_t>({0}));
  CHECK(functional.kappa() == 2);

  CHECK(functional.evaluate(pure_diagram(padded.a, 3).normalized) == 0);
  CHECK(functional.evaluate(pure_diagram(padded.b, 3).normalized) > 0);
  CHECK(functional.evaluate(pure_diagram(padded.c, 3).normalized) == 0);
}
