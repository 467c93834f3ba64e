#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "betticone/decomposition.hpp"
#include "betticone/errors.hpp"
#include "betticone/exact_matrix.hpp"
#include "betticone/hilbert.hpp"
#include "betticone/koszul.hpp"
#include "betticone/monomial_ideal.hpp"
#include "test_util.hpp"

using namespace betticone;
using testutil::worked_example_table;

TEST_CASE("worked ideal reproduces the worked table") {
  const MonomialIdeal ideal =
      parse_monomial_ideal("x^2,x*y,x*z^2", {"x", "y", "z"});
  CHECK(koszul_betti_table(ideal) == worked_example_table());
}

TEST_CASE("small ideals with known resolutions") {
  const MonomialIdeal principal = parse_monomial_ideal("x", {"x", "y", "z"});
  const BettiTable principal_table = koszul_betti_table(principal);
  CHECK(principal_table.support_size() == 2);
  CHECK(principal_table.get(0, 0) == 1);
  CHECK(principal_table.get(1, 1) == 1);

  // The variables form a regular sequence: binomial pattern on the
  // diagonal.
  const BettiTable full =
      koszul_betti_table(parse_monomial_ideal("x,y,z", {"x", "y", "z"}));
  CHECK(full.support_size() == 4);
  for (int i = 0; i <= 3; ++i) {
    CHECK(full.get(i, i) == binomial(3, static_cast<unsigned>(i)));
  }

  // Zero ideal: a free module.
  const BettiTable free_table =
      koszul_betti_table(MonomialIdeal(2, {}));
  CHECK(free_table.support_size() == 1);
  CHECK(free_table.get(0, 0) == 1);
}

TEST_CASE("generators are minimalized to an antichain") {
  const MonomialIdeal ideal =
      parse_monomial_ideal("x,x^2,x*y,y^3", {"x", "y"});
  REQUIRE(ideal.generators().size() == 2);
  CHECK(ideal.contains({1, 0}));
  CHECK(ideal.contains({0, 3}));
  CHECK_FALSE(ideal.contains({0, 2}));
  CHECK(ideal.to_string({"x", "y"}) == "(y^3,x)");
  CHECK(ideal.lcm_exponents() == std::vector<int>({1, 3}));
  CHECK(ideal.max_generator_degree() == 3);

  CHECK_THROWS_AS(parse_monomial_ideal("x,w", {"x", "y"}),
                  std::invalid_argument);
}

TEST_CASE("random ideals are deterministic antichains") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const MonomialIdeal first = random_ideal(seed, 4, 6, 5);
    const MonomialIdeal second = random_ideal(seed, 4, 6, 5);
    CHECK(first.generators() == second.generators());
    REQUIRE_FALSE(first.generators().empty());

    const auto& gens = first.generators();
    for (std::size_t u = 0; u < gens.size(); ++u) {
      for (std::size_t v = 0; v < gens.size(); ++v) {
        if (u == v) continue;
        bool divides = true;
        for (std::size_t t = 0; t < gens[u].size(); ++t) {
          if (gens[u][t] > gens[v][t]) divides = false;
        }
        CHECK_FALSE(divides);
      }
    }
  }
  // A cap of one generator yields principal ideals.
  CHECK(random_ideal(9, 3, 1, 5).generators().size() == 1);
}

TEST_CASE("standard monomial counting") {
  const MonomialIdeal ideal =
      parse_monomial_ideal("x^2,x*y,x*z^2", {"x", "y", "z"});
  CHECK(standard_monomial_count(ideal, 2) == 4);
  CHECK(standard_monomial_count(ideal, 0) == 1);
  CHECK(standard_monomial_count(ideal, -3) == 0);

  const MonomialIdeal maximal = parse_monomial_ideal("x,y,z", {"x", "y", "z"});
  CHECK(standard_monomial_count(maximal, 0) == 1);
  for (std::int64_t k = 1; k <= 5; ++k) {
    CHECK(standard_monomial_count(maximal, k) == 0);
  }

  CHECK_THROWS_AS(standard_monomial_count(ideal, 40'000'000'000'000),
                  TooLargeError);
}

TEST_CASE("size bounds are enforced") {
  KoszulOptions tight;
  tight.max_vars = 2;
  CHECK_THROWS_AS(
      koszul_betti_table(parse_monomial_ideal("x,y,z", {"x", "y", "z"}), tight),
      TooLargeError);
  KoszulOptions low_degree;
  low_degree.max_total_degree = 3;
  CHECK_THROWS_AS(
      koszul_betti_table(parse_monomial_ideal("x^4", {"x", "y"}), low_degree),
      TooLargeError);
}

TEST_CASE("schedules do not change the table") {
  const MonomialIdeal ideal = random_ideal(77, 4, 6, 5);
  KoszulOptions sequential;
  sequential.threads = 1;
  KoszulOptions wide;
  wide.threads = 7;
  CHECK(koszul_betti_table(ideal, sequential) ==
        koszul_betti_table(ideal, wide));
}

TEST_CASE("euler consistency against direct monomial counts") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const MonomialIdeal ideal =
        random_ideal(6400 + seed, 1 + static_cast<int>(seed % 4), 6, 5);
    const BettiTable table = koszul_betti_table(ideal);
    const std::int64_t top = ideal.max_generator_degree() + ideal.vars();
    for (std::int64_t k = 0; k <= top; ++k) {
      REQUIRE(hilbert_function(table, k) ==
              Rational(standard_monomial_count(ideal, k)));
    }
  }
}

TEST_CASE("oracle tables always have increasing top sequences") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const BettiTable table = koszul_betti_table(
        random_ideal(6500 + seed, 1 + static_cast<int>(seed % 4), 6, 5));
    CHECK_NOTHROW(top_degree_sequence(table));
  }
}

TEST_CASE("the two elimination strategies agree on random matrices") {
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  std::uniform_int_distribution<int> value(-4, 4);
  std::uniform_int_distribution<int> den(1, 5);
  for (int trial = 0; trial < 120; ++trial) {
    ExactMatrix matrix(size(rng), size(rng));
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
      for (std::size_t c = 0; c < matrix.cols(); ++c) {
        matrix.at(r, c) = Rational(value(rng), den(rng));
      }
    }
    CHECK(matrix.rank() == matrix.rank_gauss());
  }

  // Rank-deficient by construction: duplicate rows.
  ExactMatrix degenerate(4, 3);
  for (std::size_t c = 0; c < 3; ++c) {
    degenerate.at(0, c) = Rational(static_cast<int>(c) + 1);
    degenerate.at(1, c) = Rational(static_cast<int>(c) + 1);
    degenerate.at(2, c) = Rational(2 * (static_cast<int>(c) + 1));
  }
  CHECK(degenerate.rank() == 1);
  CHECK(degenerate.rank_gauss() == 1);
}
