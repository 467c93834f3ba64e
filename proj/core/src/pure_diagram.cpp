#include "betticone/pure_diagram.hpp"

#include <cstdlib>
#include <optional>

#include "betticone/errors.hpp"

namespace betticone {

PureDiagram pure_diagram(const DegreeSequence& type, int ambient_vars) {
  const std::size_t r = type.top_index();
  if (r > static_cast<std::size_t>(ambient_vars)) {
    throw TooLongError("degree sequence " + type.to_string() + " needs " +
                       std::to_string(r) + " syzygy steps but only " +
                       std::to_string(ambient_vars) + " variables");
  }

  BettiTable normalized(ambient_vars);
  Int denominator_lcm = 1;
  for (std::size_t i = 0; i <= r; ++i) {
    Int product = 1;
    for (std::size_t j = 0; j <= r; ++j) {
      if (j == i) continue;
      product *= boost::multiprecision::abs(Int(type[j] - type[i]));
    }
    normalized.set(static_cast<int>(i), type[i], Rational(1, product));
    denominator_lcm = boost::multiprecision::lcm(denominator_lcm, product);
  }

  // Clear denominators, then divide out the common content so entries are
  // coprime integers: the smallest integer point on the ray.
  Int content = 0;
  for (const auto& [key, value] : normalized.entries()) {
    const Rational scaled_entry = value * denominator_lcm;
    content = boost::multiprecision::gcd(
        content, boost::multiprecision::numerator(scaled_entry));
  }
  const Rational scale(denominator_lcm, content);
  return PureDiagram{type, normalized, normalized.scaled(scale), scale};
}

std::vector<Rational> herzog_kuhl_residuals(const PureDiagram& diagram) {
  const std::size_t r = diagram.type.top_index();
  std::vector<Rational> residuals;
  residuals.reserve(r);
  for (std::size_t s = 0; s < r; ++s) {
    Rational sum = 0;
    for (std::size_t i = 0; i <= r; ++i) {
      const Rational entry =
          diagram.canonical.get(static_cast<int>(i), diagram.type[i]);
      const Int weight = int_pow(Int(diagram.type[i]), static_cast<unsigned>(s));
      sum += (i % 2 == 0 ? entry : -entry) * weight;
    }
    residuals.push_back(sum);
  }
  return residuals;
}

namespace {

// Entry of a sequence in the infinity-padded view.
std::optional<std::int64_t> padded(const DegreeSequence& d, std::size_t i) {
  if (i < d.length()) return d[i];
  return std::nullopt;
}

}  // namespace

bool facet_identity_check(const DegreeSequence& a, const DegreeSequence& b,
                          const DegreeSequence& b_prime,
                          const DegreeSequence& c, std::size_t tau,
                          std::size_t k) {
  if (k <= tau) throw BadChainError("positions must satisfy k > tau");
  if (k >= c.length()) {
    throw BadChainError("position k is outside the longer sequence");
  }

  const bool a_k_infinite = a.length() == k;
  if (!a_k_infinite && a.length() != c.length()) {
    throw BadChainError("sequences must have equal length, or a shorter by "
                        "exactly the k-th slot");
  }

  // a and c agree away from tau and k, and dominate there.
  for (std::size_t i = 0; i < c.length(); ++i) {
    const auto ai = padded(a, i);
    if (i == tau || i == k) {
      if (ai && *ai <= c[i]) {
        throw BadChainError("a must strictly dominate c at the differing "
                            "positions");
      }
      continue;
    }
    if (!ai || *ai != c[i]) {
      throw BadChainError("sequences differ away from positions tau and k");
    }
  }

  // The mixed sequences of the exchange: b keeps a_tau and takes c_k,
  // b' keeps c_tau and takes a_k.
  std::vector<std::int64_t> b_expect(a.degrees().begin(), a.degrees().end());
  if (a_k_infinite) b_expect.push_back(0);
  b_expect[k] = c[k];
  std::vector<std::int64_t> bp_expect(a.degrees().begin(), a.degrees().end());
  bp_expect[tau] = c[tau];

  const auto rebuild = [](const std::vector<std::int64_t>& v) {
    try {
      return DegreeSequence(v);
    } catch (const NotIncreasingError&) {
      throw BadChainError("mixed sequence is not strictly increasing; the "
                          "exchange needs k > tau+1 or a_tau < c_{tau+1}");
    }
  };
  if (rebuild(b_expect) != b || rebuild(bp_expect) != b_prime) {
    throw BadChainError("b and b' do not match the exchange construction");
  }

  const int vars = static_cast<int>(c.length()) - 1;
  const BettiTable beta_a = pure_diagram(a, vars).normalized;
  const BettiTable beta_b = pure_diagram(b, vars).normalized;
  const BettiTable beta_bp = pure_diagram(b_prime, vars).normalized;
  const BettiTable beta_c = pure_diagram(c, vars).normalized;

  const Rational c_k = c[k], c_tau = c[tau], a_tau = a[tau];
  BettiTable lhs(vars), rhs(vars);
  if (a_k_infinite) {
    // beta(a) + (c_k - c_tau) beta(c) = (c_k - a_tau) beta(b) + beta(b')
    lhs = axpy(beta_a, c_k - c_tau, beta_c);
    rhs = axpy(beta_bp, c_k - a_tau, beta_b);
  } else {
    const Rational a_k = a[k];
    lhs = axpy(beta_a.scaled(a_k - a_tau), c_k - c_tau, beta_c);
    rhs = axpy(beta_bp.scaled(a_k - c_tau), c_k - a_tau, beta_b);
  }
  return lhs == rhs;
}

}  // namespace betticone
