#include "slate/text.hpp"

#include <cctype>
#include <map>
#include <utility>

#include "slate/parse_error.hpp"

namespace slate {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_whitespace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_whitespace();
    return pos_ == text_.size();
  }

  char peek() {
    skip_whitespace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    skip_whitespace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  std::size_t position() const { return pos_; }

  /// Maximal run of decimal digits; empty runs are an error.
  Integer digits() {
    skip_whitespace();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected digits", pos_);
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  /// Unsigned rational literal: digits with an optional /digits part.
  Rational unsigned_rational() {
    Integer num = digits();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t den_pos = pos_;
      Integer den = digits();
      if (den == 0) throw ParseError("zero denominator", den_pos);
      return Rational(std::move(num), std::move(den));
    }
    return Rational(std::move(num));
  }

  /// Rational literal with an optional leading sign.
  Rational rational() {
    skip_whitespace();
    bool negative = consume('-');
    Rational r = unsigned_rational();
    return negative ? -r : r;
  }

  std::string identifier() {
    skip_whitespace();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::islower(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected identifier", pos_);
    }
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect_end() {
    if (!at_end()) throw ParseError("unexpected trailing input", pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(std::string_view text) {
  Scanner scan(text);
  Rational r = scan.rational();
  scan.expect_end();
  return r;
}

Sequence parse_sequence(std::string_view text) {
  Scanner scan(text);
  Sequence terms;
  bool after_comma = false;
  while (!scan.at_end() || after_comma) {
    std::size_t token_pos = scan.position();
    char c = scan.peek();
    if (!(c == '-' || std::isdigit(static_cast<unsigned char>(c)))) {
      throw ParseError("malformed rational (token " + std::to_string(terms.size() + 1) + ")",
                       token_pos);
    }
    terms.push_back(scan.rational());
    after_comma = scan.consume(',');
  }
  return terms;
}

namespace {

constexpr unsigned long kMaxExponent = 1000000;

/// One polynomial term without its sign: c, c*x, c*x^k, x, x^k.
std::pair<unsigned long, Rational> parse_term(Scanner& scan) {
  Rational coefficient(1);
  bool saw_coefficient = false;
  char c = scan.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    coefficient = scan.rational();
    saw_coefficient = true;
    if (!scan.consume('*')) return {0, coefficient};
  }
  std::size_t var_pos = scan.position();
  char v = scan.peek();
  if (v != 'x' && v != 'z') {
    if (saw_coefficient) throw ParseError("expected variable after '*'", var_pos);
    throw ParseError("expected term", var_pos);
  }
  scan.consume(v);
  unsigned long power = 1;
  if (scan.consume('^')) {
    std::size_t exp_pos = scan.position();
    Integer k = scan.digits();
    if (k > kMaxExponent) throw ParseError("exponent too large", exp_pos);
    power = k.get_ui();
  }
  return {power, coefficient};
}

}  // namespace

Polynomial parse_poly(std::string_view text) {
  Scanner scan(text);
  std::map<unsigned long, Rational> terms;

  bool negative = scan.consume('-');
  if (!negative) scan.consume('+');
  for (;;) {
    auto [power, coefficient] = parse_term(scan);
    if (negative) coefficient = -coefficient;
    terms[power] += coefficient;
    if (scan.at_end()) break;
    if (scan.consume('+')) {
      negative = false;
    } else if (scan.consume('-')) {
      negative = true;
    } else {
      throw ParseError("expected '+' or '-'", scan.position());
    }
  }

  std::vector<Rational> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1, Rational(0));
  for (const auto& [power, coefficient] : terms) coeffs[power] = coefficient;
  return Polynomial(std::move(coeffs));
}

namespace {

Value parse_value(Scanner& scan);

FiniteSet parse_set_body(Scanner& scan) {
  scan.expect('{');
  std::vector<Value> elements;
  if (!scan.consume('}')) {
    do {
      elements.push_back(parse_value(scan));
    } while (scan.consume(','));
    scan.expect('}');
  }
  return FiniteSet(std::move(elements));
}

Value parse_value(Scanner& scan) {
  char c = scan.peek();
  if (c == '(') {
    scan.expect('(');
    Value first = parse_value(scan);
    scan.expect(',');
    Value second = parse_value(scan);
    scan.expect(')');
    return Value::pair(std::move(first), std::move(second));
  }
  if (c == '{') return Value::set(parse_set_body(scan));
  if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
    bool negative = scan.consume('-');
    Integer n = scan.digits();
    return Value(negative ? Integer(-n) : n);
  }
  return Value(scan.identifier());
}

}  // namespace

FiniteSet parse_set(std::string_view text) {
  Scanner scan(text);
  FiniteSet s = parse_set_body(scan);
  scan.expect_end();
  return s;
}

Relation parse_relation(std::string_view text) {
  Scanner scan(text);
  FiniteSet pairs = parse_set_body(scan);
  std::size_t keyword_pos = scan.position();
  if (scan.identifier() != "on") throw ParseError("expected 'on'", keyword_pos);
  FiniteSet domain = parse_set_body(scan);
  scan.expect_end();
  return Relation(std::move(domain), std::move(pairs));
}

std::string render_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& coeffs = p.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Rational& c = coeffs[i];
    if (c.is_zero()) continue;
    bool negative = c < Rational(0);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    Rational magnitude = abs(c);
    if (i == 0) {
      out += magnitude.str();
    } else {
      if (magnitude != Rational(1)) {
        out += magnitude.str();
        out += '*';
      }
      out += 'x';
      if (i > 1) {
        out += '^';
        out += std::to_string(i);
      }
    }
  }
  return out;
}

std::string render_sequence(const Sequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ", ";
    out += s[i].str();
  }
  return out;
}

}  // namespace slate
