#pragma once

#include <string>
#include <vector>

#include "opineq/jensen.hpp"

namespace opineq {

// Kantorovich constant (h+1)^2 / (4h); >= 1, symmetric under h -> 1/h.
double kantorovich(double h);

// A weighted pair (a, b, v) with the derived quantities every bound uses.
struct MeanContext {
  double a;
  double b;
  double v;
  double h;  // b/a
  double d;  // min(a, b)
  double D;  // max(a, b)
  double r;  // min(v, 1-v)
  double R;  // max(v, 1-v)

  MeanContext(double a, double b, double v);
};

struct Means {
  double nabla;  // (1-v)a + vb
  double sharp;  // a^(1-v) b^v
  double heinz;  // (a^(1-v) b^v + b^(1-v) a^v) / 2
};
Means means(const MeanContext& c);

struct BoundPair {
  double lower;
  double upper;
};

// Sandwiches of ratio = nabla / sharp.
// classical:  K(h)^r <= ratio <= K(h)^R
// refined:    multiplies each side by exp((v(1-v)/2 - {r,R}/4)((a-b)/D)^2)
// reverse:    swaps the exponents and divides by d = min(a,b) instead:
//             K(h)^R exp((v(1-v)/2 - R/4)((a-b)/d)^2) <= ratio
//                                <= K(h)^r exp((v(1-v)/2 - r/4)((a-b)/d)^2)
// dragomir:   exp(v(1-v)/2 ((a-b)/D)^2) <= ratio <= exp(v(1-v)/2 ((a-b)/d)^2)
BoundPair young_classical(const MeanContext& c);
BoundPair young_refined(const MeanContext& c);
BoundPair young_reverse(const MeanContext& c);
BoundPair dragomir_bounds(const MeanContext& c);

// Additive sandwich of (1-v) + v*t where t = b/a after normalising so that
// a >= b (if a < b the pair is swapped and v replaced by 1-v, which leaves
// nabla and sharp unchanged).  All values are in units of max(a, b):
//   K(sqrt(t))^r' t^v + r(1-sqrt(t))^2 <= (1-v) + vt
//                                      <= K(sqrt(t))^R' t^v + r(1-sqrt(t))^2
// with r' = min(2r, 1-2r), R' = max(2r, 1-2r).
struct WzlBounds {
  double t;      // min(a,b)/max(a,b)
  double v;      // weight after normalisation
  double mid;    // (1-v) + v*t
  double lower;
  double upper;
};
WzlBounds wzl_bounds(const MeanContext& c);

// Geometric-Heinz-arithmetic chain with the variance-style corrections:
//   sqrt(ab) <= H_v - (d/8)((1-2v) log(a/b))^2
//            <= (a+b)/2 - (d/8)(log(a/b))^2 <= (a+b)/2
// plus the weaker classical bound (d/8) log^2(a/b) <= (a+b)/2 - sqrt(ab).
struct HeinzChain {
  double geometric;
  double heinz;  // H_v itself, for reference
  double refined_heinz;
  double refined_arith;
  double arith;
  double dragomir_lhs;  // (d/8) log^2(a/b)
  double dragomir_rhs;  // (a+b)/2 - sqrt(ab)
};
HeinzChain heinz_chain(const MeanContext& c);

// K(h) >= exp(((a-b)/D)^2 / 4) with h = b/a.
struct KantorovichExp {
  double kantorovich_value;
  double exp_value;
  double difference;  // kantorovich_value - exp_value; >= 0 in exact reals
};
KantorovichExp kantorovich_vs_exp(double a, double b);

// The refined/reverse bounds rewritten through the weighted-vs-uniform
// Jensen-gap bounds for f = -log with alpha = 1/D^2 resp. beta = 1/d^2:
//   exp(2{r,R} eq_gap + {alpha,beta}/2 (var_w - 2{r,R} var_eq)).
// Identical to young_refined / young_reverse as real numbers; exposed so the
// identity can be checked numerically.
struct RouteBounds {
  double refined_lower;
  double refined_upper;
  double reverse_lower;
  double reverse_upper;
};
RouteBounds derivation_route_bounds(const MeanContext& c);

// The six published no-ordering comparisons: refined-vs-dragomir upper
// bounds at (a,b) = (2,1), v in {0.1, 0.3}, and the additive wzl bounds vs
// t^v-scaled refined bounds at t = 0.1, v in {0.45, 0.9}.
struct RemarkComparison {
  std::string name;
  double computed;
  double reference;  // the published value
  double delta;      // computed - reference
};
std::vector<RemarkComparison> compare_remarks();

// Everything above evaluated at one context, with verdicts.  Margin
// conventions: lower bounds record (target - bound), upper bounds record
// (bound - target); target is the ratio for multiplicative families and the
// normalised mid value for wzl.  rel_margin divides by 1 + the larger side.
struct BoundEntry {
  std::string family;  // classical | refined | reverse | dragomir | wzl
  std::string side;    // lower | upper
  double value;
  double margin;
  double rel_margin;
  bool holds;
};

struct YoungReport {
  double a;
  double b;
  double v;
  double nabla;
  double sharp;
  double heinz;
  double ratio;  // nabla / sharp
  std::vector<BoundEntry> bounds;  // ten entries, fixed family order
  double worst_rel_margin;
  bool all_hold;
};
YoungReport young_report(const MeanContext& c,
                         double rel_tol = kVerdictRelTol);

}  // namespace opineq
