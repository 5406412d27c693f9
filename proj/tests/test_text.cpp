#include <random>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "slate/parse_error.hpp"
#include "slate/text.hpp"

using slate::FiniteSet;
using slate::Polynomial;
using slate::Rational;
using slate::Sequence;
using slate::Value;

namespace {

Polynomial poly(std::vector<int> coeffs) {
  std::vector<Rational> r(coeffs.begin(), coeffs.end());
  return Polynomial(r);
}

}  // namespace

TEST_SUITE("text") {

TEST_CASE("rational literals") {
  CHECK(slate::parse_rational("1/2") == Rational(1, 2));
  CHECK(slate::parse_rational("-3/4") == Rational(-3, 4));
  CHECK(slate::parse_rational("7") == Rational(7));
  CHECK(slate::parse_rational(" -12 ") == Rational(-12));
  CHECK(slate::parse_rational("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(slate::parse_rational("1/0"), slate::ParseError);
  CHECK_THROWS_AS(slate::parse_rational("a"), slate::ParseError);
  CHECK_THROWS_AS(slate::parse_rational("1x"), slate::ParseError);
  CHECK_THROWS_AS(slate::parse_rational(""), slate::ParseError);
}

TEST_CASE("sequences split on commas or whitespace") {
  CHECK(slate::parse_sequence("0, 1, 4, 9") ==
        Sequence{Rational(0), Rational(1), Rational(4), Rational(9)});
  CHECK(slate::parse_sequence("1/2 3/2") == Sequence{Rational(1, 2), Rational(3, 2)});
  CHECK(slate::parse_sequence("5") == Sequence{Rational(5)});
  CHECK(slate::parse_sequence("").empty());
  CHECK(slate::parse_sequence("  ").empty());
}

TEST_CASE("malformed sequence entries name the offending token") {
  try {
    slate::parse_sequence("1, x");
    FAIL("expected a parse error");
  } catch (const slate::ParseError& e) {
    CHECK(std::string(e.what()).find("token 2") != std::string::npos);
  }
  CHECK_THROWS_AS(slate::parse_sequence("1,,2"), slate::ParseError);
  CHECK_THROWS_AS(slate::parse_sequence("1 2,"), slate::ParseError);
}

TEST_CASE("polynomial expressions") {
  CHECK(slate::parse_poly("x^2") == poly({0, 0, 1}));
  CHECK(slate::parse_poly("3*x^2 - 1/2*x + 4") ==
        Polynomial({Rational(4), Rational(-1, 2), Rational(3)}));
  CHECK(slate::parse_poly("x + x") == poly({0, 2}));
  CHECK(slate::parse_poly("1 - x") == poly({1, -1}));
  CHECK(slate::parse_poly("-x^3") == poly({0, 0, 0, -1}));
  CHECK(slate::parse_poly("0") == Polynomial());
  CHECK(slate::parse_poly("x - x") == Polynomial());
  CHECK(slate::parse_poly("2*x^2 + 1 - x^2") == poly({1, 0, 1}));
}

TEST_CASE("z is accepted as an input alias for x") {
  CHECK(slate::parse_poly("z^2 + z") == poly({0, 1, 1}));
  CHECK(slate::parse_poly("1 - z") == poly({1, -1}));
}

TEST_CASE("polynomial syntax errors") {
  CHECK_THROWS_AS(slate::parse_poly(""), slate::ParseError);
  CHECK_THROWS_AS(slate::parse_poly("x +"), slate::ParseError);
  CHECK_THROWS_AS(slate::parse_poly("3*"), slate::ParseError);
  CHECK_THROWS_AS(slate::parse_poly("3**x"), slate::ParseError);
  CHECK_THROWS_AS(slate::parse_poly("x^"), slate::ParseError);
  CHECK_THROWS_AS(slate::parse_poly("y + 1"), slate::ParseError);
  CHECK_THROWS_AS(slate::parse_poly("4x"), slate::ParseError);
  CHECK_THROWS_AS(slate::parse_poly("x^9999999"), slate::ParseError);
}

TEST_CASE("polynomials render in descending human order") {
  CHECK(slate::render_poly(Polynomial({Rational(4), Rational(-1, 2), Rational(3)})) ==
        "3*x^2 - 1/2*x + 4");
  CHECK(slate::render_poly(poly({0, 0, 1})) == "x^2");
  CHECK(slate::render_poly(Polynomial()) == "0");
  CHECK(slate::render_poly(poly({-1})) == "-1");
  CHECK(slate::render_poly(poly({0, -1})) == "-x");
  CHECK(slate::render_poly(poly({0, 1, 0, -2})) == "-2*x^3 + x");
  CHECK(slate::render_poly(poly({5})) == "5");
  CHECK(slate::render_poly(Polynomial({Rational(1, 3)})) == "1/3");
}

TEST_CASE("parsing inverts rendering on random polynomials") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p = oracle::random_polynomial(rng, 6, 9, 4);
    std::string text = slate::render_poly(p);
    CAPTURE(text);
    CHECK(slate::parse_poly(text) == p);
  }
}

TEST_CASE("sequences render with comma separators") {
  CHECK(slate::render_sequence({Rational(1), Rational(3), Rational(5)}) == "1, 3, 5");
  CHECK(slate::render_sequence({Rational(1, 2)}) == "1/2");
  CHECK(slate::render_sequence({}).empty());
}

TEST_CASE("set literals") {
  CHECK(slate::parse_set("{1, 2, 3}") == FiniteSet{Value(1), Value(2), Value(3)});
  CHECK(slate::parse_set("{}").empty());
  CHECK(slate::parse_set("{b, a}") == FiniteSet{Value("a"), Value("b")});
  CHECK(slate::parse_set("{(1, a)}") ==
        FiniteSet{Value::pair(Value(1), Value("a"))});
  CHECK(slate::parse_set("{{1}, {2}}") ==
        FiniteSet{Value::set({Value(1)}), Value::set({Value(2)})});
  CHECK(slate::parse_set("{2, 1, 2}") == FiniteSet{Value(1), Value(2)});
  CHECK(slate::parse_set("{-3}") == FiniteSet{Value(-3)});
  CHECK_THROWS_AS(slate::parse_set("{1, 2"), slate::ParseError);
  CHECK_THROWS_AS(slate::parse_set("1, 2}"), slate::ParseError);
}

TEST_CASE("relation literals carry their domain") {
  slate::Relation r = slate::parse_relation("{(1,2), (2,3)} on {1,2,3}");
  CHECK(r.domain() == FiniteSet{Value(1), Value(2), Value(3)});
  CHECK(r.contains(Value(1), Value(2)));
  CHECK(r.contains(Value(2), Value(3)));
  CHECK_FALSE(r.contains(Value(1), Value(3)));

  CHECK_THROWS_AS(slate::parse_relation("{(1,2)}"), slate::ParseError);
  CHECK_THROWS_AS(slate::parse_relation("{(1,2)} on"), slate::ParseError);
  // Well-formed text, but the pair falls outside the declared domain.
  CHECK_THROWS_AS(slate::parse_relation("{(1,9)} on {1,2}"), std::domain_error);
}

}  // TEST_SUITE
