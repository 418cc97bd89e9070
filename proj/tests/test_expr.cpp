#include <doctest.h>

#include "sl2sym/expr.hpp"

using namespace sl2sym;

TEST_CASE("parse builds the expected tree") {
  const ExprPtr e = parse("s[2,1] + 2*p[2]");
  const ExprPtr expected = make_binary('+', make_atom(AtomKind::schur, {2, 1}),
                                       make_binary('*', make_literal(2), make_atom(AtomKind::power_sum, {2})));
  CHECK(*e == *expected);
  CHECK(*parse("  s [ 2 , 1 ]+2 * p[2] ") == *expected);
  CHECK(*parse("-1/2") == *make_negate(make_literal(Rational(1, 2))));
  CHECK(*parse("p[1]^2") == *make_power(make_atom(AtomKind::power_sum, {1}), 2));
  CHECK(*parse("s[]") == *make_atom(AtomKind::schur, {}));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_WITH_AS(parse("s[1,2]"), doctest::Contains("partition not weakly decreasing"), ParseError);
  CHECK_THROWS_WITH_AS(parse("s[2,0]"), doctest::Contains("partition parts must be positive"), ParseError);
  CHECK_THROWS_AS(parse("p[1,1]"), ParseError);
  CHECK_THROWS_AS(parse("1/0"), ParseError);
  CHECK_THROWS_AS(parse("2 p[1]"), ParseError);
  try {
    parse("s[2,1] + ");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.position() == 10);
    CHECK(std::string(err.what()).find("position 10") != std::string::npos);
  }
}

TEST_CASE("printing round trips") {
  for (const char* text : {"s[2,1] + 2*p[2]", "3*p[2] - p[1]^2", "-(e[2] - h[3])*y[1,1]", "1/3*s[] + -2"}) {
    const ExprPtr e = parse(text);
    CHECK(*parse(print(*e)) == *e);
  }
}

TEST_CASE("evaluation in the Schur basis") {
  CHECK(evaluate_schur(*parse("3*p[2]-p[1]^2"), 3) == z_generator_schur(2, 3));
  CHECK(evaluate_schur(*parse("s[]"), 3) == SchurVector::unit(3));
  CHECK_THROWS_AS(evaluate_schur(*parse("e[3]"), 2), InvalidInput);
  CHECK_THROWS_AS(evaluate_schur(*parse("y[1]"), 2), InvalidInput);
  const SchurVector a = evaluate_schur(*parse("s[2,1] - p[2]"), 3);
  const SchurVector b = evaluate_schur(*parse("e[2] + 1/2"), 3);
  CHECK(evaluate_schur(*parse("(s[2,1] - p[2])*(e[2] + 1/2)"), 3) == multiply(a, b));
}

TEST_CASE("evaluation in the diagram basis") {
  CHECK(evaluate_diagram(*parse("y[1]*y[1]"), std::nullopt) ==
        DiagramVector::diagram({2}) + DiagramVector::diagram({1, 1}));
  CHECK(evaluate_diagram(*parse("p[3]"), 2) == pi_k(3, 2));
  CHECK(evaluate_diagram(*parse("s[2]"), 2) == DiagramVector::diagram({2}, 2));
  CHECK_THROWS_AS(evaluate_diagram(*parse("e[3]"), 2), InvalidInput);
}

TEST_CASE("rational literals") {
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
}
