#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "opineq/expr.hpp"

using namespace opineq::expr;
using doctest::Approx;

TEST_CASE("printer emits the canonical spaced form") {
  CHECK(to_string(parse("2*x^3-4*x+1")) == "2 * x^3 - 4 * x + 1");
  CHECK(to_string(parse("x*(x+1)")) == "x * (x + 1)");
  CHECK(to_string(parse("x-(1-x)")) == "x - (1 - x)");
  CHECK(to_string(parse("x/(x+1)/2")) == "x / (x + 1) / 2");
  CHECK(to_string(parse("sin(x)^2")) == "sin(x)^2");
  CHECK(to_string(parse("2^x^2")) == "2^x^2");
  CHECK(to_string(parse("(2^x)^2")) == "(2^x)^2");
  CHECK(to_string(parse("-(x+1)")) == "-(x + 1)");
  CHECK(to_string(parse("-x")) == "-x");
  CHECK(to_string(parse("-x^2")) == "(-x)^2");
  CHECK(to_string(parse("2^-x")) == "2^(-x)");
  CHECK(to_string(parse("exp(sin(x))*cos(x)")) == "exp(sin(x)) * cos(x)");
  CHECK(to_string(parse("0.25")) == "0.25");
}

TEST_CASE("parse(to_string(e)) round-trips structurally") {
  const std::vector<std::string> sources = {
      "x",
      "2*x^3-4*x+1",
      "x*(x+1)",
      "sin(x)^2",
      "2^x^2",
      "(2^x)^2",
      "-(x+1)",
      "-x^2",
      "x/(x+1)/2",
      "x-(1-x)",
      "exp(sin(x))*cos(x)",
      "log(1+x^2)",
      "1e3",
      "0.25*x",
      "2^-x",
      "x^1",
      "x^0",
      "-2",
  };
  for (const auto& s : sources) {
    CAPTURE(s);
    NodePtr e = parse(s);
    NodePtr again = parse(to_string(e));
    CHECK(structurally_equal(e, again));
  }
}

TEST_CASE("unary minus binds tighter than the power operator") {
  CHECK(evaluate(parse("-x^2"), 3.0) == 9.0);
  CHECK(evaluate(parse("-2^2"), 0.0) == 4.0);
  CHECK(evaluate(parse("0-x^2"), 3.0) == -9.0);
}

TEST_CASE("evaluation basics") {
  CHECK(evaluate(parse("2*x^3-4*x+1"), 2.0) == 9.0);
  CHECK(evaluate(parse("x^10"), 3.0) == 59049.0);  // integer fast path, exact
  CHECK(evaluate(parse("x^-2"), 2.0) == Approx(0.25).epsilon(1e-15));
  CHECK(evaluate(parse("1e3"), 0.0) == 1000.0);
  CHECK(evaluate(parse("exp(log(x))"), 5.0) == Approx(5.0).epsilon(1e-15));
  CHECK(evaluate(parse("sin(x)^2+cos(x)^2"), 1.234) ==
        Approx(1.0).epsilon(1e-15));
}

TEST_CASE("evaluation domain failures raise EvalError") {
  CHECK_THROWS_AS(evaluate(parse("1/(x-x)"), 7.0), EvalError);
  CHECK_THROWS_AS(evaluate(parse("log(x)"), 0.0), EvalError);
  CHECK_THROWS_AS(evaluate(parse("log(x-2)"), 1.0), EvalError);
  CHECK_THROWS_AS(evaluate(parse("x^0.5"), -2.0), EvalError);
  CHECK_THROWS_AS(evaluate(parse("(0-x)^0.5"), 2.0), EvalError);
  // 0 raised to a negative integer constant goes through the fast path.
  NodePtr bad = binary(Kind::pow, variable(), constant(-2.0));
  CHECK_THROWS_AS(evaluate(bad, 0.0), EvalError);
  CHECK(evaluate(bad, 2.0) == Approx(0.25).epsilon(1e-15));
}

TEST_CASE("syntax errors carry the offending byte offset") {
  auto offset_of = [](const char* text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("x +") == 3);
  CHECK(offset_of("(x") == 0);
  CHECK(offset_of("x y") == 2);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("2**x") == 2);
  CHECK(offset_of("tan(x)") == 0);

  CHECK_THROWS_WITH_AS(parse("x +"), doctest::Contains("unexpected end"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse("(x"), doctest::Contains("unmatched '('"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse("x y"), doctest::Contains("trailing"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse("tan(x)"),
                       doctest::Contains("unknown identifier"), ParseError);
  CHECK_THROWS_WITH_AS(parse("sin x"), doctest::Contains("expected '('"),
                       ParseError);
  CHECK_THROWS_AS(parse("1.2.3"), ParseError);
}

TEST_CASE("symbolic derivatives of the primitive forms") {
  CHECK(structurally_equal(differentiate(parse("sin(x)")), parse("cos(x)")));
  CHECK(structurally_equal(differentiate(parse("cos(x)")), parse("-sin(x)")));
  CHECK(structurally_equal(differentiate(parse("exp(x)")), parse("exp(x)")));
  CHECK(structurally_equal(differentiate(parse("log(x)")), parse("1/x")));
  CHECK(structurally_equal(differentiate(parse("x^3")), parse("3*x^2")));
  CHECK(structurally_equal(differentiate(parse("x")), constant(1.0)));
  CHECK(structurally_equal(differentiate(constant(4.0)), constant(0.0)));
}

TEST_CASE("derivatives agree with closed forms numerically") {
  // f = exp(sin x): f'' = exp(sin x) (cos^2 x - sin x).
  NodePtr f2 = differentiate(differentiate(parse("exp(sin(x))")));
  double x = 0.7;
  double expect =
      std::exp(std::sin(x)) * (std::cos(x) * std::cos(x) - std::sin(x));
  CHECK(evaluate(f2, x) == Approx(expect).epsilon(1e-12));

  // d/dx x^x = x^x (log x + 1).
  NodePtr g1 = differentiate(parse("x^x"));
  CHECK(evaluate(g1, 2.0) == Approx(4.0 * (std::log(2.0) + 1.0)).epsilon(1e-12));

  // d^2/dx^2 log(1 + x^2) = (2 - 2x^2) / (1 + x^2)^2.
  NodePtr h2 = differentiate(differentiate(parse("log(1+x^2)")));
  double y = -1.3;
  double denom = (1.0 + y * y) * (1.0 + y * y);
  CHECK(evaluate(h2, y) == Approx((2.0 - 2.0 * y * y) / denom).epsilon(1e-12));
}

TEST_CASE("structural equality distinguishes shapes") {
  CHECK(structurally_equal(parse("x+1"), parse("x + 1")));
  CHECK_FALSE(structurally_equal(parse("x+1"), parse("1+x")));
  CHECK_FALSE(structurally_equal(parse("x"), constant(0.0)));
  CHECK(structurally_equal(constant(2.5), constant(2.5)));
  CHECK_FALSE(structurally_equal(constant(2.5), constant(-2.5)));
}
