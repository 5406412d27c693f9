#pragma once

/**
 * @file formula.hpp
 * @brief Propositional formulas with parsing, evaluation, and brute-force
 *        truth-table decision procedures over any number of atoms.
 */

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace slate {

/// Immutable propositional formula tree with value semantics.
class Formula {
 public:
  enum class Kind { Atom, Constant, Not, And, Or, Implies, Iff };

  /// Atom names are nonempty, start with a lowercase letter, and are
  /// alphanumeric thereafter.
  static Formula atom(std::string name);
  static Formula constant(bool value);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);

  Kind kind() const;
  const std::string& name() const;  // Atom only
  bool value() const;               // Constant only
  Formula child() const;            // Not only
  Formula lhs() const;              // binary nodes
  Formula rhs() const;

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  static Formula binary(Kind kind, Formula lhs, Formula rhs);
  std::shared_ptr<const Node> node_;
};

/// Truth-value assignment; evaluation requires it to cover every atom.
using Valuation = std::map<std::string, bool>;

/// Parses the grammar
///   formula := iff
///   iff     := imp ("<->" imp)*
///   imp     := or ("->" imp)?
///   or      := and ("|" and)*
///   and     := neg ("&" neg)*
///   neg     := "~" neg | prim
///   prim    := ident | "T" | "F" | "(" formula ")"
///   ident   := [a-z][a-zA-Z0-9]*
/// with insignificant whitespace. "->" is right-associative; "&", "|"
/// and "<->" are left-associative; "~" binds tightest.
Formula parse_formula(std::string_view text);

/// Atoms in order of first occurrence.
std::vector<std::string> atoms(const Formula& f);

/// Classical two-valued semantics; an atom missing from the valuation is
/// a domain error naming the atom.
bool evaluate(const Formula& f, const Valuation& v);

struct TruthTableRow {
  Valuation valuation;
  bool result;
};

/// All 2^n rows over the atoms of f in first-occurrence order, the first
/// atom varying slowest and true enumerated before false. A formula with
/// no atoms yields a single row with the empty valuation.
std::vector<TruthTableRow> truth_table(const Formula& f);

bool is_valid(const Formula& f);
bool is_satisfiable(const Formula& f);
bool is_contradiction(const Formula& f);

/// True iff f and g agree under every valuation of their combined atoms.
bool are_equivalent(const Formula& f, const Formula& g);

/// Renders with minimal parentheses; parse_formula(render_formula(f))
/// is structurally f.
std::string render_formula(const Formula& f);

}  // namespace slate
