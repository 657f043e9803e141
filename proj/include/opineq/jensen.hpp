#pragma once

#include <span>
#include <vector>

#include "opineq/matops.hpp"

namespace opineq {

// One-sided relative slack applied to every inequality verdict: a true
// inequality must never be flagged as failed by round-off.
inline constexpr double kVerdictRelTol = 1e-9;
// Tolerance for the exact-identity cross checks (direct-sum reduction,
// scalar reduction, proof-route identities).
inline constexpr double kEquivRelTol = 1e-10;

// Positive weights summing to 1 (within 1e-12); validated on construction.
struct WeightVector {
  std::vector<double> p;
  explicit WeightVector(std::vector<double> weights);
};

// Both sides of a Jensen-type inequality plus the variance correction:
//   lhs          = f(mean)
//   rhs_classical= mean of f
//   rhs_refined  = rhs_classical - alpha/2 * variance
// The refined verdict is the extended inequality for convexifiable f; with
// alpha = 0 the report collapses to the classical statement.
struct JensenReport {
  double lhs;
  double rhs_classical;
  double variance;
  double alpha;
  double rhs_refined;
  double margin_refined;   // rhs_refined - lhs
  double margin_classical; // rhs_classical - lhs
  bool holds_refined;
  bool holds_classical;
};

// Single operator: f(<Ax,x>) vs <f(A)x,x> - alpha/2 (<A^2x,x> - <Ax,x>^2).
// Requires unit x and Sp(A) inside m.domain; alpha is caller-certified.
JensenReport jensen_operator(const FunctionModel& m, double alpha,
                             const SymmetricOperator& a, const StateVector& x,
                             double rel_tol = kVerdictRelTol);

// Several operators with vectors satisfying sum ||x_i||^2 = 1; equals
// jensen_operator on direct_sum(as) with the concatenated vector.
JensenReport jensen_multi(const FunctionModel& m, double alpha,
                          std::span<const SymmetricOperator> as,
                          std::span<const StateVector> xs,
                          double rel_tol = kVerdictRelTol);

// Weighted version: sums p_i <.x, x> over same-dimension operators; equals
// jensen_multi under x_i = sqrt(p_i) x.
JensenReport jensen_weighted(const FunctionModel& m, double alpha,
                             std::span<const SymmetricOperator> as,
                             const WeightVector& w, const StateVector& x,
                             double rel_tol = kVerdictRelTol);

// Scalar sample points: lhs = f(sum p_i t_i), etc.
JensenReport jensen_scalar(const FunctionModel& m, double alpha,
                           std::span<const double> ts, const WeightVector& w,
                           double rel_tol = kVerdictRelTol);

// Two-sided bounds on the Jensen gap of a convex model in terms of the
// equal-weight gap: n*min(p) * eq_gap <= gap <= n*max(p) * eq_gap.
struct GapBounds {
  double lower;
  double upper;
  double gap;     // sum p_i f(t_i) - f(sum p_i t_i)
  double eq_gap;  // same with uniform weights 1/n
};

// Rejects models whose convexifier is below -1e-9 (the bounds need convex f).
GapBounds pecaric_mitroi_bounds(const FunctionModel& m,
                                std::span<const double> ts,
                                const WeightVector& w);
// Variant for callers that already computed convexifier(m) (hot loops).
GapBounds pecaric_mitroi_bounds(const FunctionModel& m,
                                std::span<const double> ts,
                                const WeightVector& w,
                                const Convexifier& alpha);

// The sin counterexample scan: for each p, lhs = sin(2*pi*(1-p)) against the
// classical bound 0 and the refined bound 2*pi^2*p*(1-p).  The classical
// bound is expected to fail for p in (1/2, 1).
struct SinScanRow {
  double p;
  double lhs;
  double bound_classical;
  double bound_refined;
  bool holds_classical;
  bool holds_refined;
};

std::vector<SinScanRow> sin_example_scan(std::span<const double> p_grid);

}  // namespace opineq
