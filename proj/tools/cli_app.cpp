#include "cli_app.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "betticone/decomposition.hpp"
#include "betticone/errors.hpp"
#include "betticone/facet.hpp"
#include "betticone/hilbert.hpp"
#include "betticone/koszul.hpp"
#include "betticone/monomial_ideal.hpp"
#include "betticone/pairing.hpp"
#include "betticone/pure_diagram.hpp"
#include "betticone/supernatural.hpp"
#include "betticone/table_io.hpp"

namespace betticone::cli {

namespace {

using nlohmann::json;

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

BettiTable load_table(const std::string& path, std::istream& in) {
  return table_from_json(read_input(path, in));
}

json table_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, value] : table.entries()) {
    entries.push_back({key.first, key.second, rational_to_string(value)});
  }
  return json{{"vars", table.ambient_vars()}, {"entries", std::move(entries)}};
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string piece = text.substr(pos, comma - pos);
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw std::invalid_argument("malformed integer list: '" + text + "'");
    }
    values.push_back(value);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return values;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> names;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string name = text.substr(pos, comma - pos);
    if (name.empty()) throw std::invalid_argument("empty variable name");
    names.push_back(std::move(name));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return names;
}

struct Format {
  bool paper = false;
};

void add_format_flag(CLI::App* cmd, Format& format) {
  cmd->add_flag_callback(
      "--paper", [&format] { format.paper = true; },
      "render arrays in the row-shifted layout instead of JSON");
}

void emit(std::ostream& out, const json& doc) { out << doc.dump() << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in) {
  CLI::App app{"exact computations with Betti tables: chain decompositions "
               "into pure diagrams, cohomology pairings, facet functionals, "
               "Hilbert data and a Koszul-homology table generator"};
  app.require_subcommand(1);
  std::function<void()> action;

  // ---- pure ------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "pure", "pure diagram of a degree sequence (normalized and smallest "
                "integer tables)");
    auto degrees = std::make_shared<std::string>();
    auto vars = std::make_shared<int>(0);
    auto format = std::make_shared<Format>();
    cmd->add_option("degrees", *degrees, "comma separated degree sequence")
        ->required();
    cmd->add_option("--vars", *vars, "ambient variable count (default: r)");
    add_format_flag(cmd, *format);
    cmd->callback([&action, degrees, vars, format, &out] {
      action = [degrees, vars, format, &out] {
        const DegreeSequence type = DegreeSequence::parse(*degrees);
        const int n = *vars > 0 ? *vars : static_cast<int>(type.top_index());
        const PureDiagram diagram = pure_diagram(type, std::max(n, 1));
        if (format->paper) {
          out << "type " << type.to_string() << ", " << std::max(n, 1)
              << " variables\n";
          out << "canonical (scale " << rational_to_string(diagram.canonical_scale)
              << "):\n"
              << render_layout(diagram.canonical);
          out << "normalized:\n" << render_layout(diagram.normalized);
        } else {
          emit(out, json{{"type", type.degrees()},
                         {"vars", diagram.canonical.ambient_vars()},
                         {"scale", rational_to_string(diagram.canonical_scale)},
                         {"canonical", table_json(diagram.canonical)},
                         {"normalized", table_json(diagram.normalized)}});
        }
      };
    });
  }

  // ---- decompose ---------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "decompose",
        "greedy chain decomposition of a table into pure diagrams");
    auto path = std::make_shared<std::string>();
    auto normalized = std::make_shared<bool>(false);
    auto format = std::make_shared<Format>();
    cmd->add_option("table", *path, "table JSON file, or - for stdin")
        ->required();
    cmd->add_flag("--normalized", *normalized,
                  "report coefficients against the normalized diagrams");
    add_format_flag(cmd, *format);
    cmd->callback([&action, path, normalized, format, &out, &in] {
      action = [path, normalized, format, &out, &in] {
        const BettiTable table = load_table(*path, in);
        const Decomposition decomposition = decompose(table);
        const auto coefficient_of = [&](const DecompositionPart& part) {
          return *normalized ? part.normalized_coefficient()
                             : part.coefficient;
        };
        if (format->paper) {
          out << "beta =\n";
          for (std::size_t l = 0; l < decomposition.parts.size(); ++l) {
            const auto& part = decomposition.parts[l];
            out << (l == 0 ? "   " : " + ")
                << rational_to_string(coefficient_of(part)) << " x "
                << part.diagram.type.to_string() << "\n"
                << render_layout(*normalized ? part.diagram.normalized
                                             : part.diagram.canonical);
          }
        } else {
          json parts = json::array();
          for (const auto& part : decomposition.parts) {
            parts.push_back(
                {{"coefficient", rational_to_string(coefficient_of(part))},
                 {"type", part.diagram.type.degrees()},
                 {"canonical", table_json(part.diagram.canonical)}});
          }
          emit(out, json{{"vars", table.ambient_vars()},
                         {"coefficient_basis",
                          *normalized ? "normalized" : "canonical"},
                         {"parts", std::move(parts)}});
        }
      };
    });
  }

  // ---- supernatural ------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "supernatural",
        "cohomology values of the supernatural table with given roots");
    auto roots_text = std::make_shared<std::string>();
    auto rank_text = std::make_shared<std::string>();
    auto window = std::make_shared<std::string>();
    auto format = std::make_shared<Format>();
    cmd->add_option("--roots", *roots_text,
                    "strictly decreasing integer roots (may be empty: '')")
        ->required();
    cmd->add_option("--rank", *rank_text,
                    "positive rational scale (default: integral)");
    cmd->add_option("--window", *window, "twist range kmin:kmax")->required();
    add_format_flag(cmd, *format);
    cmd->callback([&action, roots_text, rank_text, window, format, &out] {
      action = [roots_text, rank_text, window, format, &out] {
        const std::vector<std::int64_t> roots =
            roots_text->empty() ? std::vector<std::int64_t>{}
                                : parse_int_list(*roots_text);
        const SupernaturalTable sheaf =
            rank_text->empty()
                ? SupernaturalTable(roots)
                : SupernaturalTable(roots, parse_rational(*rank_text));
        const auto colon = window->find(':');
        if (colon == std::string::npos) {
          throw std::invalid_argument("window must be kmin:kmax");
        }
        const std::int64_t kmin =
            parse_int_list(window->substr(0, colon)).at(0);
        const std::int64_t kmax =
            parse_int_list(window->substr(colon + 1)).at(0);
        if (kmin > kmax) throw std::invalid_argument("empty window");
        if (format->paper) {
          for (int j = 0; j <= sheaf.dim(); ++j) {
            out << "h^" << j << ":";
            for (std::int64_t k = kmin; k <= kmax; ++k) {
              out << ' ' << rational_to_string(sheaf.gamma(j, k));
            }
            out << '\n';
          }
          out << "k:  ";
          for (std::int64_t k = kmin; k <= kmax; ++k) out << ' ' << k;
          out << '\n';
        } else {
          json values = json::array();
          for (int j = 0; j <= sheaf.dim(); ++j) {
            for (std::int64_t k = kmin; k <= kmax; ++k) {
              const Rational g = sheaf.gamma(j, k);
              if (g != 0) {
                values.push_back({j, k, rational_to_string(g)});
              }
            }
          }
          emit(out, json{{"roots", sheaf.roots()},
                         {"rank", rational_to_string(sheaf.rank())},
                         {"window", {kmin, kmax}},
                         {"gamma", std::move(values)}});
        }
      };
    });
  }

  // ---- pair ----------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "pair", "pairing of a Betti table against a supernatural table");
    auto path = std::make_shared<std::string>();
    auto roots_text = std::make_shared<std::string>();
    auto rank_text = std::make_shared<std::string>();
    auto tau = std::make_shared<int>(-1);
    auto kappa_text = std::make_shared<std::string>();
    cmd->add_option("table", *path, "table JSON file, or - for stdin")
        ->required();
    cmd->add_option("--roots", *roots_text, "roots of the supernatural table")
        ->required();
    cmd->add_option("--rank", *rank_text, "positive rational scale");
    cmd->add_option("--tau", *tau, "truncation position (with --kappa)");
    cmd->add_option("--kappa", *kappa_text,
                    "truncation degree bound, or 'inf'");
    cmd->callback([&action, path, roots_text, rank_text, tau, kappa_text,
                   &out, &in] {
      action = [path, roots_text, rank_text, tau, kappa_text, &out, &in] {
        const BettiTable table = load_table(*path, in);
        const std::vector<std::int64_t> roots =
            roots_text->empty() ? std::vector<std::int64_t>{}
                                : parse_int_list(*roots_text);
        const SupernaturalTable sheaf =
            rank_text->empty()
                ? SupernaturalTable(roots)
                : SupernaturalTable(roots, parse_rational(*rank_text));
        json doc{{"roots", sheaf.roots()},
                 {"rank", rational_to_string(sheaf.rank())}};
        if (*tau >= 0) {
          TruncationSpec spec;
          spec.tau = *tau;
          if (!kappa_text->empty() && *kappa_text != "inf") {
            spec.kappa = parse_int_list(*kappa_text).at(0);
          }
          doc["tau"] = spec.tau;
          doc["kappa"] = spec.kappa ? json(*spec.kappa) : json("inf");
          doc["value"] =
              rational_to_string(truncated_pairing(table, sheaf, spec));
        } else {
          doc["value"] = rational_to_string(pairing(table, sheaf));
        }
        emit(out, doc);
      };
    });
  }

  // ---- facet ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "facet", "facet functional of a chain triple a > b > c");
    auto a_text = std::make_shared<std::string>();
    auto b_text = std::make_shared<std::string>();
    auto c_text = std::make_shared<std::string>();
    auto vars = std::make_shared<int>(0);
    auto eval_path = std::make_shared<std::string>();
    cmd->add_option("--a", *a_text, "largest degree sequence")->required();
    cmd->add_option("--b", *b_text, "middle degree sequence")->required();
    cmd->add_option("--c", *c_text, "smallest degree sequence")->required();
    cmd->add_option("--vars", *vars, "ambient variable count (default: top "
                                     "index of c)");
    cmd->add_option("--eval", *eval_path,
                    "also evaluate the functional on this table");
    cmd->callback([&action, a_text, b_text, c_text, vars, eval_path, &out,
                   &in] {
      action = [a_text, b_text, c_text, vars, eval_path, &out, &in] {
        const ChainTriple chain{DegreeSequence::parse(*a_text),
                                DegreeSequence::parse(*b_text),
                                DegreeSequence::parse(*c_text)};
        const int n = *vars > 0 ? *vars
                                : static_cast<int>(chain.c.top_index());
        const FacetFunctional functional =
            facet_functional(chain, std::max(n, 1));
        json doc{{"vars", std::max(n, 1)}, {"tau", functional.tau()}};
        if (functional.kind() == FacetFunctional::Kind::Coordinate) {
          doc["kind"] = "coordinate";
          doc["degree"] = functional.coordinate_degree();
        } else {
          doc["kind"] = "truncated-pairing";
          doc["roots"] = functional.sheaf().roots();
          doc["rank"] = rational_to_string(functional.sheaf().rank());
          doc["kappa"] = functional.kappa();
        }
        json evaluations;
        const auto value_on = [&](const DegreeSequence& d) {
          return rational_to_string(functional.evaluate(
              pure_diagram(d, std::max(n, 1)).canonical));
        };
        evaluations["a"] = value_on(chain.a);
        evaluations["b"] = value_on(chain.b);
        evaluations["c"] = value_on(chain.c);
        doc["evaluations"] = std::move(evaluations);
        if (!eval_path->empty()) {
          doc["value"] = rational_to_string(
              functional.evaluate(load_table(*eval_path, in)));
        }
        emit(out, doc);
      };
    });
  }

  // ---- betti -----------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "betti",
        "minimal Betti table of S/I for a monomial ideal, from scratch");
    auto ideal_text = std::make_shared<std::string>();
    auto vars_text = std::make_shared<std::string>();
    auto seed = std::make_shared<std::uint64_t>(0);
    auto has_seed = std::make_shared<bool>(false);
    auto rand_vars = std::make_shared<int>(3);
    auto rand_gens = std::make_shared<int>(4);
    auto rand_deg = std::make_shared<int>(4);
    auto max_vars = std::make_shared<int>(5);
    auto max_degree = std::make_shared<int>(8);
    auto threads = std::make_shared<unsigned>(0);
    auto format = std::make_shared<Format>();
    auto* ideal_opt =
        cmd->add_option("--ideal", *ideal_text,
                        "generators, e.g. \"x^2,x*y,x*z^2\" (needs --vars)");
    auto* seed_opt = cmd->add_option_function<std::uint64_t>(
        "--seed",
        [seed, has_seed](std::uint64_t value) {
          *seed = value;
          *has_seed = true;
        },
        "draw a random ideal deterministically from this seed");
    ideal_opt->excludes(seed_opt);
    seed_opt->excludes(ideal_opt);
    cmd->add_option("--vars", *vars_text, "variable names, e.g. x,y,z");
    cmd->add_option("--rand-vars", *rand_vars, "variables for --seed");
    cmd->add_option("--rand-gens", *rand_gens, "max generators for --seed");
    cmd->add_option("--rand-deg", *rand_deg, "max total degree for --seed");
    cmd->add_option("--max-vars", *max_vars, "refuse more variables");
    cmd->add_option("--max-degree", *max_degree,
                    "refuse larger generator degrees");
    cmd->add_option("--threads", *threads, "worker threads (0 = auto)");
    add_format_flag(cmd, *format);
    cmd->callback([&action, ideal_text, vars_text, seed, has_seed, rand_vars,
                   rand_gens, rand_deg, max_vars, max_degree, threads, format,
                   &out] {
      action = [ideal_text, vars_text, seed, has_seed, rand_vars, rand_gens,
                rand_deg, max_vars, max_degree, threads, format, &out] {
        std::vector<std::string> names;
        std::optional<MonomialIdeal> ideal;
        if (*has_seed) {
          ideal = random_ideal(*seed, *rand_vars, *rand_gens, *rand_deg);
          for (int t = 1; t <= *rand_vars; ++t) {
            names.push_back("x" + std::to_string(t));
          }
        } else {
          if (ideal_text->empty()) {
            throw std::invalid_argument("need --ideal or --seed");
          }
          if (vars_text->empty()) {
            throw std::invalid_argument("--ideal needs --vars");
          }
          names = split_names(*vars_text);
          ideal = parse_monomial_ideal(*ideal_text, names);
        }
        KoszulOptions options;
        options.max_vars = *max_vars;
        options.max_total_degree = *max_degree;
        options.threads = *threads;
        const BettiTable table = koszul_betti_table(*ideal, options);
        if (format->paper) {
          out << "ideal " << ideal->to_string(names) << " in "
              << ideal->vars() << " variables\n"
              << render_layout(table);
        } else {
          emit(out, table_json(table));
        }
      };
    });
  }

  // ---- hilbert ---------------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "hilbert", "Hilbert numerator, codimension and multiplicity");
    auto path = std::make_shared<std::string>();
    auto at = std::make_shared<std::int64_t>(0);
    auto series = std::make_shared<std::int64_t>(0);
    cmd->add_option("table", *path, "table JSON file, or - for stdin")
        ->required();
    auto* at_opt =
        cmd->add_option("--at", *at, "print the Hilbert function value");
    auto* series_opt = cmd->add_option(
        "--series", *series, "print Hilbert function values for 0..K");
    at_opt->excludes(series_opt);
    series_opt->excludes(at_opt);
    cmd->callback([&action, path, at, series, at_opt, series_opt, &out, &in] {
      action = [path, at, series, at_opt, series_opt, &out, &in] {
        const BettiTable table = load_table(*path, in);
        if (at_opt->count() > 0) {
          emit(out, json{{"k", *at},
                         {"value", rational_to_string(
                                       hilbert_function(table, *at))}});
        } else if (series_opt->count() > 0) {
          json values = json::array();
          for (std::int64_t k = 0; k <= *series; ++k) {
            values.push_back(
                {k, rational_to_string(hilbert_function(table, k))});
          }
          emit(out, json{{"series", std::move(values)}});
        } else {
          const HilbertNumerator numerator(table);
          emit(out,
               json{{"numerator", numerator.to_string()},
                    {"codimension", numerator.vanishing_order_at_one()},
                    {"multiplicity", rational_to_string(multiplicity(table))}});
        }
      };
    });
  }

  // ---- check-bounds -----------------------------------------------------------
  {
    auto* cmd = app.add_subcommand(
        "check-bounds",
        "multiplicity bound and Hilbert series comparisons for a table");
    auto path = std::make_shared<std::string>();
    auto window = std::make_shared<std::int64_t>(-1);
    cmd->add_option("table", *path, "table JSON file, or - for stdin")
        ->required();
    cmd->add_option("--window", *window,
                    "series comparison degree window (default: max shift "
                    "+ 2n)");
    cmd->callback([&action, path, window, &out, &in] {
      action = [path, window, &out, &in] {
        const BettiTable table = load_table(*path, in);
        const BoundsReport report = multiplicity_bounds_check(
            table, *window >= 0 ? std::optional<std::int64_t>(*window)
                                : std::nullopt);
        emit(out,
             json{{"projective_dimension", report.projective_dimension},
                  {"codimension", report.codim},
                  {"minimal_shifts", report.minimal_shifts},
                  {"maximal_shifts", report.maximal_shifts},
                  {"multiplicity", rational_to_string(report.multiplicity_value)},
                  {"multiplicity_bound",
                   rational_to_string(report.multiplicity_bound)},
                  {"bound_holds", report.bound_holds},
                  {"bound_equality", report.bound_equality},
                  {"pure", report.pure},
                  {"decomposition_parts", report.decomposition_parts},
                  {"window", report.window},
                  {"series_lower_holds", report.series_lower_holds},
                  {"series_upper_holds", report.series_upper_holds}});
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    action();
    return 0;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace betticone::cli
