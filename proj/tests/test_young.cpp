#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "opineq/young.hpp"

using namespace opineq;
using doctest::Approx;

TEST_CASE("kantorovich constant") {
  CHECK(kantorovich(1.0) == 1.0);
  CHECK(kantorovich(2.0) == 1.125);
  CHECK(kantorovich(0.5) == 1.125);  // symmetric under h -> 1/h
  CHECK(kantorovich(10.0) == Approx(kantorovich(0.1)).epsilon(1e-15));
  CHECK(kantorovich(3.0) >= 1.0);
  CHECK_THROWS_AS(kantorovich(0.0), std::invalid_argument);
  CHECK_THROWS_AS(kantorovich(-1.0), std::invalid_argument);
}

TEST_CASE("mean context validation and derived fields") {
  MeanContext c(2.0, 1.0, 0.1);
  CHECK(c.h == 0.5);
  CHECK(c.d == 1.0);
  CHECK(c.D == 2.0);
  CHECK(c.r == Approx(0.1).epsilon(1e-15));
  CHECK(c.R == Approx(0.9).epsilon(1e-15));
  CHECK_THROWS_AS(MeanContext(0.0, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(MeanContext(1.0, -2.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(MeanContext(1.0, 2.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(MeanContext(1.0, 2.0, -0.1), std::invalid_argument);
}

TEST_CASE("frozen bounds at (a, b, v) = (2, 1, 0.1)") {
  MeanContext c(2.0, 1.0, 0.1);
  Means m = means(c);
  CHECK(m.nabla == Approx(1.9).epsilon(1e-15));
  CHECK(m.sharp == Approx(1.8660659830736148).epsilon(1e-12));

  BoundPair cl = young_classical(c);
  CHECK(cl.lower == Approx(1.011847940917809).epsilon(1e-12));
  CHECK(cl.upper == Approx(1.1118271377609912).epsilon(1e-12));

  BoundPair rf = young_refined(c);
  CHECK(rf.lower == Approx(1.0169198498282015).epsilon(1e-12));
  CHECK(rf.upper == Approx(1.0629039439332106).epsilon(1e-12));

  BoundPair rev = young_reverse(c);
  CHECK(rev.lower == Approx(0.9286760884104126).epsilon(1e-12));
  CHECK(rev.upper == Approx(1.0322886252276622).epsilon(1e-12));

  double ratio = m.nabla / m.sharp;
  CHECK(ratio == Approx(1.0181847894094784).epsilon(1e-12));

  // Sandwich and nesting at this point.
  CHECK(cl.lower <= ratio);
  CHECK(ratio <= cl.upper);
  CHECK(rf.lower <= ratio);
  CHECK(ratio <= rf.upper);
  CHECK(rev.lower <= ratio);
  CHECK(ratio <= rev.upper);
  CHECK(cl.lower <= rf.lower);
  CHECK(rf.upper <= cl.upper);

  BoundPair dg = dragomir_bounds(c);
  CHECK(dg.lower <= ratio);
  CHECK(ratio <= dg.upper);
  CHECK(dg.lower <= rf.lower);  // the refined lower bound dominates
}

TEST_CASE("additive bounds at t = 0.1, v = 0.45, including the swap") {
  WzlBounds w = wzl_bounds(MeanContext(1.0, 0.1, 0.45));
  CHECK(w.t == Approx(0.1).epsilon(1e-15));
  CHECK(w.v == 0.45);
  CHECK(w.mid == Approx(0.595).epsilon(1e-15));
  CHECK(w.lower == Approx(0.5765459986958221).epsilon(1e-12));
  CHECK(w.upper == Approx(0.6813093276033207).epsilon(1e-12));
  CHECK(w.lower <= w.mid);
  CHECK(w.mid <= w.upper);

  // Swapping (a, b) and v -> 1-v leaves the normalised quantities unchanged.
  WzlBounds w2 = wzl_bounds(MeanContext(0.1, 1.0, 0.55));
  CHECK(w2.t == Approx(w.t).epsilon(1e-15));
  CHECK(w2.v == Approx(w.v).epsilon(1e-15));
  CHECK(w2.mid == Approx(w.mid).epsilon(1e-14));
  CHECK(w2.lower == Approx(w.lower).epsilon(1e-14));
  CHECK(w2.upper == Approx(w.upper).epsilon(1e-14));
}

TEST_CASE("heinz chain at (2, 1, 0.3)") {
  HeinzChain hc = heinz_chain(MeanContext(2.0, 1.0, 0.3));
  CHECK(hc.geometric == Approx(1.4142135623730951).epsilon(1e-12));
  CHECK(hc.heinz == Approx(1.4278246030286936).epsilon(1e-12));
  CHECK(hc.refined_heinz == Approx(1.4182155427503296).epsilon(1e-12));
  CHECK(hc.refined_arith == Approx(1.439943373260225).epsilon(1e-12));
  CHECK(hc.arith == 1.5);
  CHECK(hc.dragomir_lhs == Approx(0.06005662673977518).epsilon(1e-12));
  CHECK(hc.dragomir_rhs == Approx(0.08578643762690495).epsilon(1e-12));

  CHECK(hc.geometric <= hc.refined_heinz);
  CHECK(hc.refined_heinz <= hc.refined_arith);
  CHECK(hc.refined_arith <= hc.arith);
  CHECK(hc.heinz <= hc.arith);
  CHECK(hc.geometric <= hc.heinz);
  CHECK(hc.dragomir_lhs <= hc.dragomir_rhs);
}

TEST_CASE("kantorovich vs exponential comparison") {
  KantorovichExp k = kantorovich_vs_exp(2.0, 1.0);
  CHECK(k.kantorovich_value == 1.125);
  CHECK(k.exp_value == Approx(1.0644944589178593).epsilon(1e-12));
  CHECK(k.difference == Approx(0.06050554108214057).epsilon(1e-12));
  CHECK(k.difference >= 0.0);

  KantorovichExp same = kantorovich_vs_exp(3.0, 3.0);
  CHECK(same.kantorovich_value == 1.0);
  CHECK(same.exp_value == 1.0);
  CHECK(same.difference == 0.0);

  CHECK_THROWS_AS(kantorovich_vs_exp(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("published comparisons: values, order, and both signs") {
  std::vector<RemarkComparison> cs = compare_remarks();
  REQUIRE(cs.size() == 6);

  const char* names[] = {
      "refined-vs-dragomir-upper-v0.10", "refined-vs-dragomir-upper-v0.30",
      "wzl-vs-refined-upper-v0.45",      "wzl-vs-refined-upper-v0.90",
      "wzl-vs-refined-lower-v0.45",      "wzl-vs-refined-lower-v0.90",
  };
  double computed[] = {0.016876084024493733, -0.04360694345330796,
                       0.03630592802215335,  -0.08600038350584176,
                       -0.012682751261635908, 0.037896023293458876};
  double reference[] = {0.0168761, -0.0436069, 0.0363059,
                        -0.0860004, -0.0126828, 0.037896};

  for (int i = 0; i < 6; ++i) {
    CAPTURE(i);
    CHECK(cs[i].name == names[i]);
    CHECK(cs[i].computed == Approx(computed[i]).epsilon(1e-12));
    CHECK(cs[i].reference == reference[i]);
    CHECK(cs[i].delta == Approx(cs[i].computed - cs[i].reference)
                             .epsilon(1e-15));
    CHECK(std::abs(cs[i].delta) <= 1e-6);
  }

  // Each comparison family exhibits both signs: no uniform ordering exists.
  CHECK(cs[0].computed > 0.0);
  CHECK(cs[1].computed < 0.0);
  CHECK(cs[2].computed > 0.0);
  CHECK(cs[3].computed < 0.0);
  CHECK(cs[4].computed < 0.0);
  CHECK(cs[5].computed > 0.0);
}

TEST_CASE("derivation route reproduces the multiplicative bounds") {
  const double tol = 1e-10;
  auto rel = [](double x, double y) {
    return std::abs(x - y) / (1.0 + std::max(std::abs(x), std::abs(y)));
  };
  for (MeanContext c : {MeanContext(2.0, 1.0, 0.1), MeanContext(0.5, 3.0, 0.77),
                        MeanContext(10.0, 0.2, 0.3),
                        MeanContext(1.5, 1.5, 0.5)}) {
    CAPTURE(c.a);
    CAPTURE(c.b);
    CAPTURE(c.v);
    RouteBounds rb = derivation_route_bounds(c);
    BoundPair rf = young_refined(c);
    BoundPair rev = young_reverse(c);
    CHECK(rel(rb.refined_lower, rf.lower) <= tol);
    CHECK(rel(rb.refined_upper, rf.upper) <= tol);
    CHECK(rel(rb.reverse_lower, rev.lower) <= tol);
    CHECK(rel(rb.reverse_upper, rev.upper) <= tol);
  }
}

TEST_CASE("full report structure at (2, 1, 0.1)") {
  YoungReport rep = young_report(MeanContext(2.0, 1.0, 0.1));
  CHECK(rep.a == 2.0);
  CHECK(rep.b == 1.0);
  CHECK(rep.v == 0.1);
  CHECK(rep.ratio == Approx(1.0181847894094784).epsilon(1e-12));
  CHECK(rep.all_hold);

  REQUIRE(rep.bounds.size() == 10);
  const char* families[] = {"classical", "refined", "reverse", "dragomir",
                            "wzl"};
  for (int f = 0; f < 5; ++f) {
    CAPTURE(f);
    CHECK(rep.bounds[2 * f].family == families[f]);
    CHECK(rep.bounds[2 * f].side == "lower");
    CHECK(rep.bounds[2 * f + 1].family == families[f]);
    CHECK(rep.bounds[2 * f + 1].side == "upper");
  }

  double worst = 1e300;
  for (const BoundEntry& e : rep.bounds) {
    CHECK(e.holds);
    CHECK(e.margin >= 0.0);
    worst = std::min(worst, e.rel_margin);
  }
  CHECK(rep.worst_rel_margin == worst);

  CHECK(rep.bounds[2].value == Approx(1.0169198498282015).epsilon(1e-12));
  CHECK(rep.bounds[3].value == Approx(1.0629039439332106).epsilon(1e-12));
}

TEST_CASE("report rejects an inconsistent tolerance only via validation") {
  // Degenerate a == b: every multiplicative bound collapses to 1 and the
  // additive ones to the flat line; the report must still hold.
  YoungReport rep = young_report(MeanContext(3.0, 3.0, 0.4));
  CHECK(rep.all_hold);
  CHECK(rep.ratio == Approx(1.0).epsilon(1e-14));
}
