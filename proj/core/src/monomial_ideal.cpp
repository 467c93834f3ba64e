#include "betticone/monomial_ideal.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "betticone/errors.hpp"

namespace betticone {

namespace {

bool divides(const std::vector<int>& divisor, const std::vector<int>& multiple) {
  for (std::size_t t = 0; t < divisor.size(); ++t) {
    if (divisor[t] > multiple[t]) return false;
  }
  return true;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int vars, std::vector<std::vector<int>> generators)
    : vars_(vars) {
  if (vars < 1) throw std::invalid_argument("need at least one variable");
  std::set<std::vector<int>> unique;
  for (auto& exponent : generators) {
    if (exponent.size() != static_cast<std::size_t>(vars)) {
      throw std::invalid_argument("exponent vector has the wrong length");
    }
    bool zero = true;
    for (const int e : exponent) {
      if (e < 0) throw std::invalid_argument("negative exponent");
      if (e > 0) zero = false;
    }
    if (zero) {
      throw std::invalid_argument("the unit monomial generates the whole ring");
    }
    unique.insert(std::move(exponent));
  }
  // Keep the divisibility antichain.
  for (const auto& candidate : unique) {
    const bool redundant = std::any_of(
        unique.begin(), unique.end(), [&](const std::vector<int>& other) {
          return other != candidate && divides(other, candidate);
        });
    if (!redundant) generators_.push_back(candidate);
  }
}

bool MonomialIdeal::contains(const std::vector<int>& exponent) const {
  return std::any_of(
      generators_.begin(), generators_.end(),
      [&](const std::vector<int>& gen) { return divides(gen, exponent); });
}

std::vector<int> MonomialIdeal::lcm_exponents() const {
  std::vector<int> lcm(static_cast<std::size_t>(vars_), 0);
  for (const auto& gen : generators_) {
    for (std::size_t t = 0; t < lcm.size(); ++t) {
      lcm[t] = std::max(lcm[t], gen[t]);
    }
  }
  return lcm;
}

int MonomialIdeal::max_generator_degree() const {
  int best = 0;
  for (const auto& gen : generators_) {
    int total = 0;
    for (const int e : gen) total += e;
    best = std::max(best, total);
  }
  return best;
}

std::string MonomialIdeal::to_string(
    const std::vector<std::string>& names) const {
  if (names.size() != static_cast<std::size_t>(vars_)) {
    throw std::invalid_argument("wrong number of variable names");
  }
  if (generators_.empty()) return "(0)";
  std::string out = "(";
  bool first_gen = true;
  for (const auto& gen : generators_) {
    if (!first_gen) out += ",";
    first_gen = false;
    bool first_factor = true;
    for (std::size_t t = 0; t < gen.size(); ++t) {
      if (gen[t] == 0) continue;
      if (!first_factor) out += "*";
      first_factor = false;
      out += names[t];
      if (gen[t] > 1) out += "^" + std::to_string(gen[t]);
    }
  }
  return out + ")";
}

MonomialIdeal parse_monomial_ideal(std::string_view generators,
                                   const std::vector<std::string>& var_names) {
  const int vars = static_cast<int>(var_names.size());
  if (vars < 1) throw std::invalid_argument("need at least one variable name");

  const auto find_var = [&](std::string_view name) {
    for (std::size_t t = 0; t < var_names.size(); ++t) {
      if (var_names[t] == name) return t;
    }
    throw std::invalid_argument("unknown variable '" + std::string(name) +
                                "'");
  };

  std::vector<std::vector<int>> exponents;
  std::size_t pos = 0;
  while (pos < generators.size()) {
    std::size_t comma = generators.find(',', pos);
    if (comma == std::string_view::npos) comma = generators.size();
    std::string_view monomial = generators.substr(pos, comma - pos);
    pos = comma + 1;

    std::vector<int> exponent(static_cast<std::size_t>(vars), 0);
    std::size_t factor_start = 0;
    while (factor_start <= monomial.size()) {
      std::size_t star = monomial.find('*', factor_start);
      if (star == std::string_view::npos) star = monomial.size();
      std::string_view factor =
          monomial.substr(factor_start, star - factor_start);
      factor_start = star + 1;

      // Trim blanks around the token.
      while (!factor.empty() && factor.front() == ' ') factor.remove_prefix(1);
      while (!factor.empty() && factor.back() == ' ') factor.remove_suffix(1);
      if (factor.empty()) {
        if (star >= monomial.size()) break;
        throw std::invalid_argument("empty factor in monomial");
      }

      const std::size_t caret = factor.find('^');
      const std::string_view name = factor.substr(0, caret);
      int power = 1;
      if (caret != std::string_view::npos) {
        const std::string digits(factor.substr(caret + 1));
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos) {
          throw std::invalid_argument("malformed exponent in '" +
                                      std::string(factor) + "'");
        }
        power = std::stoi(digits);
      }
      exponent[find_var(name)] += power;
      if (star >= monomial.size()) break;
    }
    exponents.push_back(std::move(exponent));
  }
  return MonomialIdeal(vars, std::move(exponents));
}

MonomialIdeal random_ideal(std::uint64_t seed, int vars, int max_generators,
                           int max_total_degree) {
  if (vars < 1 || max_generators < 1 || max_total_degree < 1) {
    throw std::invalid_argument("sampler parameters must be positive");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> count_dist(1, max_generators);
  std::uniform_int_distribution<int> degree_dist(1, max_total_degree);
  std::uniform_int_distribution<int> var_dist(0, vars - 1);

  std::vector<std::vector<int>> exponents;
  const int count = count_dist(rng);
  for (int g = 0; g < count; ++g) {
    std::vector<int> exponent(static_cast<std::size_t>(vars), 0);
    const int degree = degree_dist(rng);
    for (int unit = 0; unit < degree; ++unit) {
      ++exponent[static_cast<std::size_t>(var_dist(rng))];
    }
    exponents.push_back(std::move(exponent));
  }
  return MonomialIdeal(vars, std::move(exponents));
}

namespace {

Int count_outside(const MonomialIdeal& ideal, std::size_t var,
                  std::int64_t remaining, std::vector<int>& exponent) {
  if (var + 1 == exponent.size()) {
    if (remaining > static_cast<std::int64_t>(INT32_MAX)) {
      throw TooLargeError("degree too large for enumeration");
    }
    exponent[var] = static_cast<int>(remaining);
    const Int hit = ideal.contains(exponent) ? 0 : 1;
    exponent[var] = 0;
    return hit;
  }
  Int total = 0;
  for (std::int64_t e = 0; e <= remaining; ++e) {
    exponent[var] = static_cast<int>(e);
    total += count_outside(ideal, var + 1, remaining - e, exponent);
  }
  exponent[var] = 0;
  return total;
}

}  // namespace

Int standard_monomial_count(const MonomialIdeal& ideal, std::int64_t degree) {
  if (degree < 0) return 0;
  // The search walks every monomial of the given degree once.
  const Int space = binomial(Int(degree) + ideal.vars() - 1,
                             static_cast<unsigned>(ideal.vars() - 1));
  if (space > 20'000'000) {
    throw TooLargeError("too many monomials of degree " +
                        std::to_string(degree) + " to enumerate");
  }
  std::vector<int> exponent(static_cast<std::size_t>(ideal.vars()), 0);
  return count_outside(ideal, 0, degree, exponent);
}

}  // namespace betticone
