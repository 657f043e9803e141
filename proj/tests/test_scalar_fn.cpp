#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "opineq/scalar_fn.hpp"

using namespace opineq;
using doctest::Approx;

TEST_CASE("interval construction and membership") {
  Interval iv(0.0, 1.0);
  CHECK(iv.length() == 1.0);
  CHECK(iv.midpoint() == 0.5);
  CHECK(iv.contains(0.0));
  CHECK(iv.contains(1.0));
  CHECK_FALSE(iv.contains(1.0 + 1e-10));
  CHECK(iv.contains(1.0 + 1e-10, 1e-9));
  CHECK(iv.contains(-1e-10, 1e-9));
  CHECK_FALSE(iv.contains(1.1, 1e-9));
  CHECK_THROWS_AS(Interval(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Interval(2.0, 1.0), std::invalid_argument);
}

TEST_CASE("make_model carries validated symbolic derivatives") {
  FunctionModel m = make_model("0 - log(x)", Interval(1.0, 2.0), "neglog");
  CHECK(m.name == "neglog");
  CHECK(m.source == "0 - log(x)");
  CHECK(m.value(1.5) == Approx(-std::log(1.5)).epsilon(1e-15));
  CHECK(m.deriv(1.5) == Approx(-1.0 / 1.5).epsilon(1e-12));
  // Second derivative is 1/x^2; the expression evaluates fine outside the
  // certification interval too.
  CHECK(m.deriv2(3.0) == Approx(1.0 / 9.0).epsilon(1e-12));

  CHECK_THROWS_AS(make_model("x +", Interval(0.0, 1.0)), expr::ParseError);
  // log is undefined on part of the requested interval.
  CHECK_THROWS(make_model("log(x)", Interval(-1.0, 1.0)));
}

TEST_CASE("builtin registry") {
  const auto& names = builtin_model_names();
  REQUIRE(names.size() == 4);
  CHECK(names[0] == "sin");
  CHECK(names[1] == "exp");
  CHECK(names[2] == "neglog");
  CHECK(names[3] == "pow4");

  const FunctionModel& s = builtin_model("sin");
  CHECK(&s == &builtin_model("sin"));  // constructed once
  CHECK(s.domain.lo == 0.0);
  CHECK(s.domain.hi == Approx(2.0 * std::numbers::pi).epsilon(1e-15));
  CHECK(s.value(2.0 * std::numbers::pi * 0.25) == Approx(1.0).epsilon(1e-12));

  CHECK(builtin_model("exp").domain.lo == 0.0);
  CHECK(builtin_model("exp").domain.hi == 1.0);
  CHECK(builtin_model("neglog").value(1.5) ==
        Approx(-std::log(1.5)).epsilon(1e-15));
  CHECK(builtin_model("pow4").value(-0.5) == Approx(0.0625).epsilon(1e-15));

  CHECK_THROWS_AS(builtin_model("nope"), std::invalid_argument);
}

TEST_CASE("computed convexifiers of the builtins") {
  auto alpha = [](const char* name) {
    return convexifier(builtin_model(name));
  };
  CHECK(alpha("sin").alpha == Approx(-1.0).epsilon(1e-9));
  CHECK(alpha("exp").alpha == Approx(1.0).epsilon(1e-9));
  CHECK(alpha("neglog").alpha == Approx(0.25).epsilon(1e-9));
  CHECK(std::abs(alpha("pow4").alpha) < 1e-9);
  CHECK(alpha("sin").method == ConvexifierMethod::analytic_grid);

  // The certified alpha always sits at or below the true minimum of f''.
  CHECK(alpha("sin").alpha <= -1.0);
  CHECK(alpha("exp").alpha <= 1.0);
  CHECK(alpha("neglog").alpha <= 0.25);
  CHECK(alpha("pow4").alpha <= 0.0);
}

TEST_CASE("concavifiers bound the second derivative from above") {
  CHECK(concavifier(builtin_model("sin")) == Approx(1.0).epsilon(1e-9));
  CHECK(concavifier(builtin_model("sin")) >= 1.0);
  CHECK(concavifier(builtin_model("pow4")) == Approx(12.0).epsilon(1e-9));
  CHECK(concavifier(builtin_model("exp")) ==
        Approx(std::exp(1.0)).epsilon(1e-9));
  CHECK(concavifier(builtin_model("neglog")) == Approx(1.0).epsilon(1e-9));
}

TEST_CASE("lipschitz and user-supplied convexifiers") {
  Convexifier l = lipschitz_convexifier(3.5);
  CHECK(l.alpha == -3.5);
  CHECK(l.method == ConvexifierMethod::lipschitz_negation);

  Convexifier u = user_convexifier(0.75);
  CHECK(u.alpha == 0.75);
  CHECK(u.method == ConvexifierMethod::user_supplied);
}
