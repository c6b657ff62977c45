#include <doctest.h>

#include "support.hpp"

using namespace testing_support;

TEST_CASE("parsing the polynomial grammar") {
  const VarNames v{"x", "y"};
  CHECK(P("x + y") == LaurentPoly(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
  CHECK(P("3/4*x^-2*y^3 - 1") ==
        LaurentPoly(2, {{{-2, 3}, Rational(3, 4)}, {{0, 0}, Rational(-1)}}));
  CHECK(P("x^2*x") == P("x^3"));
  CHECK(P(" 2 * x ^ 2 ") == P("2*x^2"));
  CHECK(P("x^(-2)") == P("x^-2"));
  CHECK(P("x - x").is_zero());
  CHECK(P("2*3*x") == P("6*x"));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(P("x + z"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("x +"), ParseError);
  CHECK_THROWS_AS(P("x y"), ParseError);
  CHECK_THROWS_AS(P("1/0"), ParseError);
  try {
    P("x + q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("formatting is canonical and round-trips") {
  CHECK(format_poly(P("y + x"), {"x", "y"}) == "x + y");
  CHECK(format_poly(P("3/4*x^-2*y^3 - 1"), {"x", "y"}) == "3/4*x^-2*y^3 - 1");
  CHECK(format_poly(P("-x + 1"), {"x", "y"}) == "-x + 1");
  CHECK(format_poly(LaurentPoly(2), {"x", "y"}) == "0");
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    auto p = random_poly(rng, 2, 4, -3, 3);
    CHECK(P(format_poly(p, {"x", "y"})) == p);
  }
}

TEST_CASE("variable lists, points, operator names") {
  CHECK(parse_var_list("x, y,z") == VarNames{"x", "y", "z"});
  CHECK_THROWS_AS(parse_var_list("x,x"), ParseError);
  CHECK_THROWS_AS(parse_var_list("x,1y"), ParseError);
  CHECK(parse_point("(1/2, -3)") == Point{Rational(1, 2), Rational(-3)});
  auto list = parse_point_list("(-2,1);(1,-2)");
  REQUIRE(list.size() == 2);
  CHECK(list[1] == Point{1, -2});
  CHECK(parse_point_list("(-2,1) (1,-2)") == list);
  CHECK(parse_point_list(" (-2,1) ; (1,-2) ") == list);
  CHECK_THROWS_AS(parse_point_list("(1,2);"), ParseError);
  CHECK_THROWS_AS(parse_point_list("(1,2"), ParseError);
  CHECK(format_point(Point{Rational(1, 2), 0}) == "(1/2,0)");
  CHECK(format_exponent(ExponentVector{2, -1}) == "(2,-1)");
  CHECK(operator_names({"x", "y"}) == VarNames{"dx", "dy"});
}

TEST_CASE("rational helpers") {
  CHECK(parse_rational("3/-4") == Rational(-3, 4));
  CHECK(parse_rational(" 6/4 ") == Rational(3, 2));
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(factorial(5) == 120);
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(-1, 2) == 2);
  CHECK(binomial(10, 5) == 252);
  CHECK(vanishlab::floor(Rational(-1, 2)) == -1);
  CHECK(vanishlab::floor(Rational(7, 2)) == 3);
}
