#include "slate/cli.hpp"

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "slate/formula.hpp"
#include "slate/numbers.hpp"
#include "slate/parse_error.hpp"
#include "slate/polynomial.hpp"
#include "slate/rational.hpp"
#include "slate/relation.hpp"
#include "slate/series.hpp"
#include "slate/text.hpp"

namespace slate::cli {
namespace {

using nlohmann::json;

std::vector<std::string> rational_strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& value : values) out.push_back(value.str());
  return out;
}

Integer parse_integer(const std::string& text) {
  Rational value = parse_rational(text);
  if (!value.is_integer()) throw ParseError("expected an integer", 0);
  return value.num();
}

void emit_poly(const Polynomial& p, bool as_json, std::ostream& out) {
  if (as_json) {
    out << json{{"coefficients", rational_strings(p.coefficients())}}.dump() << "\n";
  } else {
    out << render_poly(p) << "\n";
  }
}

int run_closedform(const std::string& seq_text, bool as_json, std::ostream& out) {
  Sequence terms = parse_sequence(seq_text);
  Polynomial fit = closed_form(terms);
  bool verified = true;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    verified = verified && fit(Rational(static_cast<int>(i))) == terms[i];
  }
  if (as_json) {
    json doc;
    doc["degree"] = fit.degree() ? json(*fit.degree()) : json(nullptr);
    doc["coefficients"] = rational_strings(fit.coefficients());
    doc["verified"] = verified;
    out << doc.dump() << "\n";
  } else {
    out << "f(x) = " << render_poly(fit) << "\n";
  }
  return 0;
}

int run_difs(const std::string& seq_text, bool as_json, std::ostream& out) {
  Sequence diffs = difs(parse_sequence(seq_text));
  if (as_json) {
    out << json{{"terms", rational_strings(diffs)}}.dump() << "\n";
  } else {
    out << render_sequence(diffs) << "\n";
  }
  return 0;
}

int run_factor(const std::string& n_text, bool as_json, std::ostream& out) {
  Integer n = parse_integer(n_text);
  std::vector<Integer> factors = factorize(n);
  if (as_json) {
    json list = json::array();
    for (const auto& f : factors) list.push_back(f.get_str());
    out << json{{"n", n.get_str()}, {"factors", list}}.dump() << "\n";
  } else {
    out << n << " =";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      out << (i == 0 ? " " : " * ") << factors[i];
    }
    out << "\n";
  }
  return 0;
}

int run_primes(std::size_t count, bool as_json, std::ostream& out) {
  PrimeStream stream;
  std::vector<Integer> primes = stream.take(count);
  if (as_json) {
    json list = json::array();
    for (const auto& p : primes) list.push_back(p.get_str());
    out << json{{"primes", list}}.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      out << (i == 0 ? "" : ", ") << primes[i];
    }
    out << "\n";
  }
  return 0;
}

int run_logic_table(const Formula& f, bool as_json, std::ostream& out) {
  std::vector<std::string> names = atoms(f);
  std::vector<TruthTableRow> rows = truth_table(f);
  if (as_json) {
    json row_list = json::array();
    for (const auto& row : rows) {
      json values = json::array();
      for (const auto& name : names) values.push_back(row.valuation.at(name));
      row_list.push_back({{"values", values}, {"result", row.result}});
    }
    out << json{{"atoms", names}, {"rows", row_list}}.dump() << "\n";
  } else {
    for (const auto& name : names) out << name << ' ';
    out << "| " << render_formula(f) << "\n";
    for (const auto& row : rows) {
      for (const auto& name : names) {
        out << (row.valuation.at(name) ? 'T' : 'F')
            << std::string(name.size(), ' ');
      }
      out << "| " << (row.result ? 'T' : 'F') << "\n";
    }
  }
  return 0;
}

int run_logic(const std::string& mode, const std::string& formula_text,
              const std::string& second_text, bool has_second, bool as_json,
              std::ostream& out, std::ostream& err) {
  if (mode == "equiv" && !has_second) {
    err << "logic equiv requires two formulas\n";
    return 1;
  }
  if (mode != "equiv" && has_second) {
    err << "logic " << mode << " takes a single formula\n";
    return 1;
  }
  Formula f = parse_formula(formula_text);
  if (mode == "valid") {
    bool v = is_valid(f);
    if (as_json) out << json{{"valid", v}}.dump() << "\n";
    else out << (v ? "valid" : "not valid") << "\n";
  } else if (mode == "sat") {
    bool v = is_satisfiable(f);
    if (as_json) out << json{{"satisfiable", v}}.dump() << "\n";
    else out << (v ? "satisfiable" : "unsatisfiable") << "\n";
  } else if (mode == "equiv") {
    bool v = are_equivalent(f, parse_formula(second_text));
    if (as_json) out << json{{"equivalent", v}}.dump() << "\n";
    else out << (v ? "equivalent" : "not equivalent") << "\n";
  } else {
    return run_logic_table(f, as_json, out);
  }
  return 0;
}

int run_poly(const std::string& mode, const std::string& poly_text,
             const std::string& arg_text, bool has_arg, bool as_json,
             std::ostream& out, std::ostream& err) {
  Polynomial p = parse_poly(poly_text);
  if (mode == "derive") {
    if (has_arg) {
      err << "poly derive takes a single polynomial\n";
      return 1;
    }
    emit_poly(derivative(p), as_json, out);
    return 0;
  }
  if (!has_arg) {
    err << "poly " << mode << " requires a second argument\n";
    return 1;
  }
  if (mode == "eval") {
    Rational value = p(parse_rational(arg_text));
    if (as_json) out << json{{"value", value.str()}}.dump() << "\n";
    else out << value << "\n";
  } else if (mode == "mul") {
    emit_poly(p * parse_poly(arg_text), as_json, out);
  } else {
    emit_poly(compose(p, parse_poly(arg_text)), as_json, out);
  }
  return 0;
}

int run_series_div(const std::string& dividend_text,
                   const std::string& divisor_text, std::size_t terms,
                   bool as_json, std::ostream& out) {
  PowerSeries quotient = PowerSeries::from_poly(parse_poly(dividend_text)) /
                         PowerSeries::from_poly(parse_poly(divisor_text));
  std::vector<Rational> prefix = quotient.take(terms);
  if (as_json) {
    out << json{{"coefficients", rational_strings(prefix)}}.dump() << "\n";
  } else {
    out << render_sequence(prefix) << "\n";
  }
  return 0;
}

int run_relation_props(const std::string& literal, bool as_json,
                       std::ostream& out) {
  RelationProperties props = relation_properties(parse_relation(literal));
  if (as_json) {
    json doc;
    doc["reflexive"] = props.reflexive;
    doc["irreflexive"] = props.irreflexive;
    doc["symmetric"] = props.symmetric;
    doc["antisymmetric"] = props.antisymmetric;
    doc["transitive"] = props.transitive;
    doc["equivalence"] = props.equivalence;
    out << doc.dump() << "\n";
  } else {
    auto flag = [](bool b) { return b ? "true" : "false"; };
    out << "reflexive: " << flag(props.reflexive) << "\n"
        << "irreflexive: " << flag(props.irreflexive) << "\n"
        << "symmetric: " << flag(props.symmetric) << "\n"
        << "antisymmetric: " << flag(props.antisymmetric) << "\n"
        << "transitive: " << flag(props.transitive) << "\n"
        << "equivalence: " << flag(props.equivalence) << "\n";
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computer algebra: sequences, logic, polynomials, power series"};
  app.require_subcommand(1);
  bool as_json = false;

  std::string closedform_seq;
  auto* closedform = app.add_subcommand(
      "closedform", "Fit a polynomial closed form to a sequence");
  closedform->add_option("sequence", closedform_seq, "Rational terms, e.g. \"0, 1, 4, 9\"")
      ->required();
  closedform->add_flag("--json", as_json, "Emit JSON instead of text");

  std::string difs_seq;
  auto* difs_cmd = app.add_subcommand("difs", "Difference sequence of a sequence");
  difs_cmd->add_option("sequence", difs_seq, "Rational terms")->required();
  difs_cmd->add_flag("--json", as_json, "Emit JSON instead of text");

  std::string factor_n;
  auto* factor = app.add_subcommand("factor", "Factor an integer into primes");
  factor->add_option("n", factor_n, "Integer to factor, at least 2")->required();
  factor->add_flag("--json", as_json, "Emit JSON instead of text");

  std::size_t prime_count = 0;
  auto* primes = app.add_subcommand("primes", "List the first K primes");
  primes->add_option("--count", prime_count, "How many primes to list")->required();
  primes->add_flag("--json", as_json, "Emit JSON instead of text");

  std::string logic_mode, logic_formula, logic_second;
  auto* logic = app.add_subcommand("logic", "Decide propositional formulas");
  logic->add_option("mode", logic_mode, "valid, sat, equiv, or table")
      ->required()
      ->check(CLI::IsMember({"valid", "sat", "equiv", "table"}));
  logic->add_option("formula", logic_formula, "Formula, e.g. \"p & q -> p\"")->required();
  auto* logic_second_opt =
      logic->add_option("formula2", logic_second, "Second formula for equiv");
  logic->add_flag("--json", as_json, "Emit JSON instead of text");

  std::string poly_mode, poly_text, poly_arg;
  auto* poly = app.add_subcommand("poly", "Evaluate and combine polynomials");
  poly->add_option("mode", poly_mode, "eval, mul, compose, or derive")
      ->required()
      ->check(CLI::IsMember({"eval", "mul", "compose", "derive"}));
  poly->add_option("poly", poly_text, "Polynomial, e.g. \"3*x^2 - 1/2*x + 4\"")->required();
  auto* poly_arg_opt = poly->add_option(
      "arg", poly_arg, "Evaluation point for eval; second polynomial for mul/compose");
  poly->add_flag("--json", as_json, "Emit JSON instead of text");

  std::string series_mode, series_dividend, series_divisor;
  std::size_t series_terms = 10;
  auto* series = app.add_subcommand("series", "Formal power series operations");
  series->add_option("mode", series_mode, "div")
      ->required()
      ->check(CLI::IsMember({"div"}));
  series->add_option("dividend", series_dividend, "Numerator polynomial")->required();
  series->add_option("divisor", series_divisor, "Denominator polynomial")->required();
  series->add_option("--terms", series_terms, "Number of coefficients to print")
      ->capture_default_str();
  series->add_flag("--json", as_json, "Emit JSON instead of text");

  std::string relation_mode, relation_literal;
  auto* relation = app.add_subcommand("relation", "Inspect binary relations");
  relation->add_option("mode", relation_mode, "props")
      ->required()
      ->check(CLI::IsMember({"props"}));
  relation
      ->add_option("relation", relation_literal,
                   "Relation literal, e.g. \"{(1,2), (2,1)} on {1,2}\"")
      ->required();
  relation->add_flag("--json", as_json, "Emit JSON instead of text");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(closedform)) {
      return run_closedform(closedform_seq, as_json, out);
    }
    if (app.got_subcommand(difs_cmd)) {
      return run_difs(difs_seq, as_json, out);
    }
    if (app.got_subcommand(factor)) {
      return run_factor(factor_n, as_json, out);
    }
    if (app.got_subcommand(primes)) {
      return run_primes(prime_count, as_json, out);
    }
    if (app.got_subcommand(logic)) {
      return run_logic(logic_mode, logic_formula, logic_second,
                       logic_second_opt->count() > 0, as_json, out, err);
    }
    if (app.got_subcommand(poly)) {
      return run_poly(poly_mode, poly_text, poly_arg,
                      poly_arg_opt->count() > 0, as_json, out, err);
    }
    if (app.got_subcommand(series)) {
      return run_series_div(series_dividend, series_divisor, series_terms,
                            as_json, out);
    }
    return run_relation_props(relation_literal, as_json, out);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace slate::cli
