#include "slate/formula.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

#include "slate/parse_error.hpp"

namespace slate {

struct Formula::Node {
  Kind kind;
  std::string name;  // Atom
  bool value = false;
  std::shared_ptr<const Node> a;  // Not child / binary lhs
  std::shared_ptr<const Node> b;  // binary rhs
};

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

namespace {

bool valid_atom_name(const std::string& name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Formula Formula::atom(std::string name) {
  if (!valid_atom_name(name)) throw std::invalid_argument("invalid atom name: '" + name + "'");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::constant(bool value) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Constant;
  node->value = value;
  return Formula(std::move(node));
}

Formula Formula::negation(Formula f) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->a = std::move(f.node_);
  return Formula(std::move(node));
}

Formula Formula::binary(Kind kind, Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->a = std::move(lhs.node_);
  node->b = std::move(rhs.node_);
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return binary(Kind::And, std::move(lhs), std::move(rhs));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return binary(Kind::Or, std::move(lhs), std::move(rhs));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return binary(Kind::Implies, std::move(lhs), std::move(rhs));
}
Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return binary(Kind::Iff, std::move(lhs), std::move(rhs));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::name() const {
  if (node_->kind != Kind::Atom) throw std::logic_error("name() on non-atom");
  return node_->name;
}

bool Formula::value() const {
  if (node_->kind != Kind::Constant) throw std::logic_error("value() on non-constant");
  return node_->value;
}

Formula Formula::child() const {
  if (node_->kind != Kind::Not) throw std::logic_error("child() on non-negation");
  return Formula(node_->a);
}

Formula Formula::lhs() const { return Formula(node_->a); }
Formula Formula::rhs() const { return Formula(node_->b); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Formula::Kind::Atom:
      return a.node_->name == b.node_->name;
    case Formula::Kind::Constant:
      return a.node_->value == b.node_->value;
    case Formula::Kind::Not:
      return Formula(a.node_->a) == Formula(b.node_->a);
    default:
      return Formula(a.node_->a) == Formula(b.node_->a) &&
             Formula(a.node_->b) == Formula(b.node_->b);
  }
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_iff();
    skip_whitespace();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return f;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_whitespace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view token) {
    skip_whitespace();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (consume("<->")) f = Formula::equivalence(std::move(f), parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (consume("->")) return Formula::implication(std::move(f), parse_imp());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (consume("|")) f = Formula::disjunction(std::move(f), parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_neg();
    while (consume("&")) f = Formula::conjunction(std::move(f), parse_neg());
    return f;
  }

  Formula parse_neg() {
    if (consume("~")) return Formula::negation(parse_neg());
    return parse_prim();
  }

  Formula parse_prim() {
    skip_whitespace();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of formula", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = parse_iff();
      if (!consume(")")) throw ParseError("expected ')'", pos_);
      return f;
    }
    if (c == 'T') {
      ++pos_;
      return Formula::constant(true);
    }
    if (c == 'F') {
      ++pos_;
      return Formula::constant(false);
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Formula::atom(std::string(text_.substr(start, pos_ - start)));
    }
    throw ParseError("expected atom, constant, '~' or '('", pos_);
  }
};

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

// ---------------------------------------------------------------------------
// Semantics

namespace {

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      for (const std::string& seen : out) {
        if (seen == f.name()) return;
      }
      out.push_back(f.name());
      return;
    }
    case Formula::Kind::Constant:
      return;
    case Formula::Kind::Not:
      collect_atoms(f.child(), out);
      return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      return;
  }
}

}  // namespace

std::vector<std::string> atoms(const Formula& f) {
  std::vector<std::string> names;
  collect_atoms(f, names);
  return names;
}

bool evaluate(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      auto it = v.find(f.name());
      if (it == v.end()) throw std::domain_error(f.name() + " unbound");
      return it->second;
    }
    case Formula::Kind::Constant:
      return f.value();
    case Formula::Kind::Not:
      return !evaluate(f.child(), v);
    case Formula::Kind::And:
      return evaluate(f.lhs(), v) && evaluate(f.rhs(), v);
    case Formula::Kind::Or:
      return evaluate(f.lhs(), v) || evaluate(f.rhs(), v);
    case Formula::Kind::Implies:
      return !evaluate(f.lhs(), v) || evaluate(f.rhs(), v);
    case Formula::Kind::Iff:
      return evaluate(f.lhs(), v) == evaluate(f.rhs(), v);
  }
  throw std::logic_error("unreachable formula kind");
}

namespace {

/// Valuation for the given row index: the first atom varies slowest and
/// true comes before false, generalizing the two-atom enumeration
/// TT, TF, FT, FF to n atoms.
Valuation row_valuation(const std::vector<std::string>& names, std::size_t row) {
  Valuation v;
  const std::size_t n = names.size();
  for (std::size_t j = 0; j < n; ++j) {
    bool bit_set = (row >> (n - 1 - j)) & 1u;
    v[names[j]] = !bit_set;
  }
  return v;
}

}  // namespace

std::vector<TruthTableRow> truth_table(const Formula& f) {
  const std::vector<std::string> names = atoms(f);
  const std::size_t rows = std::size_t{1} << names.size();
  std::vector<TruthTableRow> table;
  table.reserve(rows);
  for (std::size_t row = 0; row < rows; ++row) {
    Valuation v = row_valuation(names, row);
    bool result = evaluate(f, v);
    table.push_back({std::move(v), result});
  }
  return table;
}

bool is_valid(const Formula& f) {
  const std::vector<std::string> names = atoms(f);
  const std::size_t rows = std::size_t{1} << names.size();
  for (std::size_t row = 0; row < rows; ++row) {
    if (!evaluate(f, row_valuation(names, row))) return false;
  }
  return true;
}

bool is_satisfiable(const Formula& f) {
  const std::vector<std::string> names = atoms(f);
  const std::size_t rows = std::size_t{1} << names.size();
  for (std::size_t row = 0; row < rows; ++row) {
    if (evaluate(f, row_valuation(names, row))) return true;
  }
  return false;
}

bool is_contradiction(const Formula& f) { return !is_satisfiable(f); }

bool are_equivalent(const Formula& f, const Formula& g) {
  std::vector<std::string> names = atoms(f);
  for (const std::string& name : atoms(g)) {
    bool seen = false;
    for (const std::string& existing : names) {
      if (existing == name) {
        seen = true;
        break;
      }
    }
    if (!seen) names.push_back(name);
  }
  const std::size_t rows = std::size_t{1} << names.size();
  for (std::size_t row = 0; row < rows; ++row) {
    Valuation v = row_valuation(names, row);
    if (evaluate(f, v) != evaluate(g, v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Binding strength; higher binds tighter.
int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::Iff:
      return 1;
    case Formula::Kind::Implies:
      return 2;
    case Formula::Kind::Or:
      return 3;
    case Formula::Kind::And:
      return 4;
    case Formula::Kind::Not:
      return 5;
    default:
      return 6;
  }
}

void render(const Formula& f, int min_precedence, std::string& out) {
  const int p = precedence(f.kind());
  if (p < min_precedence) {
    out += '(';
    render(f, 0, out);
    out += ')';
    return;
  }
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.name();
      break;
    case Formula::Kind::Constant:
      out += f.value() ? 'T' : 'F';
      break;
    case Formula::Kind::Not:
      out += '~';
      render(f.child(), p, out);
      break;
    case Formula::Kind::And:
      render(f.lhs(), p, out);
      out += " & ";
      render(f.rhs(), p + 1, out);
      break;
    case Formula::Kind::Or:
      render(f.lhs(), p, out);
      out += " | ";
      render(f.rhs(), p + 1, out);
      break;
    case Formula::Kind::Implies:
      render(f.lhs(), p + 1, out);
      out += " -> ";
      render(f.rhs(), p, out);
      break;
    case Formula::Kind::Iff:
      render(f.lhs(), p, out);
      out += " <-> ";
      render(f.rhs(), p + 1, out);
      break;
  }
}

}  // namespace

std::string render_formula(const Formula& f) {
  std::string out;
  render(f, 0, out);
  return out;
}

}  // namespace slate
