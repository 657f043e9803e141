#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "opineq/jensen.hpp"

using namespace opineq;
using doctest::Approx;

TEST_CASE("weight vectors are validated on construction") {
  CHECK_NOTHROW(WeightVector({0.25, 0.75}));
  CHECK_THROWS_AS(WeightVector({0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(WeightVector({1.5, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(WeightVector({1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightVector({}), std::invalid_argument);
  CHECK_NOTHROW(WeightVector({1.0}));
}

TEST_CASE("operator instance: exp on diag(0, 1)") {
  const FunctionModel& m = builtin_model("exp");
  SymmetricOperator a = SymmetricOperator::diagonal(std::vector{0.0, 1.0});
  double s = 1.0 / std::sqrt(2.0);
  StateVector x{{s, s}};

  JensenReport r = jensen_operator(m, 1.0, a, x);
  CHECK(r.alpha == 1.0);
  CHECK(r.lhs == Approx(1.6487212707001282).epsilon(1e-12));
  CHECK(r.rhs_classical == Approx(1.8591409142295225).epsilon(1e-12));
  CHECK(r.variance == Approx(0.25).epsilon(1e-12));
  CHECK(r.rhs_refined == Approx(1.7341409142295225).epsilon(1e-12));
  CHECK(r.margin_refined == Approx(r.rhs_refined - r.lhs).epsilon(1e-12));
  CHECK(r.holds_refined);
  CHECK(r.holds_classical);
  // Convex model: the refined bound tightens the classical one.
  CHECK(r.rhs_refined < r.rhs_classical);

  // A non-unit state vector is rejected.
  StateVector bad{{1.0, 1.0}};
  CHECK_THROWS_AS(jensen_operator(m, 1.0, a, bad), std::invalid_argument);

  // Spectrum outside the model domain is rejected.
  SymmetricOperator wide = SymmetricOperator::diagonal(std::vector{0.0, 2.0});
  CHECK_THROWS_AS(jensen_operator(m, 1.0, wide, x), SpectrumError);
}

TEST_CASE("scalar instance: sin with weights (1/4, 3/4) on (2pi, 0)") {
  const FunctionModel& m = builtin_model("sin");
  double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> ts = {two_pi, 0.0};
  WeightVector w({0.25, 0.75});

  JensenReport r = jensen_scalar(m, -1.0, ts, w);
  CHECK(r.lhs == Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(r.rhs_classical) < 1e-15);
  CHECK(r.variance == Approx(7.402203300817019).epsilon(1e-12));
  CHECK(r.rhs_refined == Approx(3.7011016504085097).epsilon(1e-12));
  // alpha = -1 adds half the variance to the plain mean-of-f bound.
  CHECK(r.rhs_refined - r.rhs_classical ==
        Approx(0.5 * r.variance).epsilon(1e-12));
  CHECK(r.holds_refined);
  CHECK_FALSE(r.holds_classical);  // the convex-style bound genuinely fails

  // Sample points must stay inside the model domain.
  std::vector<double> outside = {two_pi + 1.0, 0.0};
  CHECK_THROWS_AS(jensen_scalar(m, -1.0, outside, w), SpectrumError);
  // Mismatched lengths are rejected.
  std::vector<double> three = {0.0, 1.0, 2.0};
  CHECK_THROWS_AS(jensen_scalar(m, -1.0, three, w), std::invalid_argument);
}

TEST_CASE("alpha = 0 collapses the refinement to the classical statement") {
  const FunctionModel& m = builtin_model("exp");
  SymmetricOperator a =
      SymmetricOperator::diagonal(std::vector{0.2, 0.6, 0.9});
  double s = 1.0 / std::sqrt(3.0);
  StateVector x{{s, s, s}};
  JensenReport r = jensen_operator(m, 0.0, a, x);
  CHECK(r.rhs_refined == r.rhs_classical);
  CHECK(r.holds_refined);
  CHECK(r.holds_classical);
}

TEST_CASE("gap bounds on a frozen instance of the convex -log model") {
  const FunctionModel& m = builtin_model("neglog");
  std::vector<double> ts = {2.0, 1.0};
  WeightVector w({0.9, 0.1});
  GapBounds g = pecaric_mitroi_bounds(m, ts, w);
  CHECK(g.gap == Approx(0.018021423668443996).epsilon(1e-12));
  CHECK(g.eq_gap == Approx(0.05889151782819173).epsilon(1e-12));
  CHECK(g.lower == Approx(0.011778303565638346).epsilon(1e-12));
  CHECK(g.upper == Approx(0.10600473209074511).epsilon(1e-12));
  CHECK(g.lower <= g.gap);
  CHECK(g.gap <= g.upper);

  // n * min(p) and n * max(p) scale the equal-weight gap.
  CHECK(g.lower == Approx(2.0 * 0.1 * g.eq_gap).epsilon(1e-12));
  CHECK(g.upper == Approx(2.0 * 0.9 * g.eq_gap).epsilon(1e-12));

  // Models that are not convex on their domain are rejected.
  std::vector<double> ts_sin = {1.0, 2.0};
  CHECK_THROWS_AS(pecaric_mitroi_bounds(builtin_model("sin"), ts_sin, w),
                  std::invalid_argument);
}

TEST_CASE("sin example scan: refined bound holds where the classical fails") {
  std::vector<double> grid(101);
  for (int i = 0; i <= 100; ++i) grid[i] = i / 100.0;
  std::vector<SinScanRow> rows = sin_example_scan(grid);
  REQUIRE(rows.size() == 101);

  for (int i = 0; i <= 100; ++i) {
    CAPTURE(i);
    const SinScanRow& row = rows[i];
    CHECK(row.p == grid[i]);
    CHECK(row.bound_classical == 0.0);
    CHECK(row.lhs ==
          Approx(std::sin(2.0 * std::numbers::pi * (1.0 - row.p)))
              .epsilon(1e-12));
    CHECK(row.bound_refined ==
          Approx(2.0 * std::numbers::pi * std::numbers::pi * row.p *
                 (1.0 - row.p))
              .epsilon(1e-12));
    CHECK(row.holds_refined);
    // The classical bound fails exactly on the open upper half (0.5, 1).
    bool expect_fail = (i >= 51 && i <= 99);
    CHECK(row.holds_classical == !expect_fail);
  }

  const SinScanRow& mid = rows[75];
  CHECK(mid.lhs == Approx(1.0).epsilon(1e-15));
  CHECK(mid.bound_refined == Approx(3.7011016504085097).epsilon(1e-12));
}
