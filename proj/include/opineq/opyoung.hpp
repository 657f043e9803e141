#pragma once

#include <array>
#include <string>

#include "opineq/matops.hpp"
#include "opineq/young.hpp"

namespace opineq {

// Which operator carries the lower spectral band: under condition (i)
// m'I <= A <= mI < MI <= B <= M'I; under (ii) the roles of A and B swap.
enum class SandwichCondition { i, ii };

// Spectral sandwich parameters.  h = M/m and h' = M'/m' are the inner and
// outer spectral ratios; 1 < h <= h'.
struct SandwichSpec {
  double m_prime;
  double m;
  double M;
  double M_prime;
  SandwichCondition condition;

  SandwichSpec(double m_prime, double m, double M, double M_prime,
               SandwichCondition condition);
  double h() const { return M / m; }
  double h_prime() const { return M_prime / m_prime; }
};

// True iff the four spectral inequalities of spec.condition hold for (A, B),
// each tested as smallest eigenvalue of the difference >= -1e-9 * scale.
bool check_condition(const SymmetricOperator& a, const SymmetricOperator& b,
                     const SandwichSpec& spec);

// A^(1/2) (A^(-1/2) B A^(-1/2))^v A^(1/2) through the eigh-based functional
// calculus; requires positive definite A and positive semidefinite inner
// term.  v in [0, 1].
SymmetricOperator operator_geometric_mean(const SymmetricOperator& a,
                                          const SymmetricOperator& b,
                                          double v);

// Pointwise coefficient functions of the spectrum variable x > 0:
//   lower: K(x)^r exp((v(1-v)/2 - r/4) ((1-x)/max(1,x))^2)
//   upper: K(x)^R exp((v(1-v)/2 - R/4) ((1-x)/max(1,x))^2)
// Both are nondecreasing for x >= 1 (checked empirically by
// endpoint_attainment_scan), which is what makes endpoint evaluation below
// give uniform bounds over Sp(T), T = A^(-1/2) B A^(-1/2).
double refined_coefficient_lower(double x, double v);
double refined_coefficient_upper(double x, double v);

struct LoewnerCheck {
  std::string name;        // refined_lower | refined_upper | reverse_*
  double coefficient;      // scalar c in the tested c * sharp vs nabla
  double min_eigenvalue;   // of the difference in the asserted direction
  double rel_margin;       // min_eigenvalue / (1 + ||difference||_F)
  bool holds;
};

// The four Loewner-order checks on (A, B):
//   c_low * (A sharp_v B)  <=  A nabla_v B  <=  c_high * (A sharp_v B)
// and the same sandwich with the reverse-family coefficients, where
//   c_low      = K(h)^r  exp((v(1-v)/2 - r/4)((1-h)/h)^2)
//   c_high     = K(h')^R exp((v(1-v)/2 - R/4)((1-h')/h')^2)
//   c_rev_low  = K(h)^R  exp((v(1-v)/2 - R/4)(1-h')^2)
//   c_rev_high = K(h')^r exp((v(1-v)/2 - r/4)(1-h')^2)
// c_low / c_high come from minimising / maximising the pointwise refined
// bounds over Sp(T) in [h, h'].  The reverse coefficients bound each factor
// of the pointwise reverse bounds (with d = 1 for pairs (1, x), x >= 1)
// separately over [h, h'], which keeps them valid without any monotonicity
// assumption.  Under condition (ii), Sp(T) lies in [1/h', 1/h] and the
// substitution x -> 1/x together with K(x) = K(1/x) maps all four pointwise
// bounds onto the condition-(i) ones, so the same coefficients apply.
struct InequalityReport {
  double v;
  double h;
  double h_prime;
  double c_low;
  double c_high;
  double c_rev_low;
  double c_rev_high;
  std::array<LoewnerCheck, 4> checks;
  double worst_rel_margin;
  bool all_hold;
};

InequalityReport operator_young_check(const SymmetricOperator& a,
                                      const SymmetricOperator& b, double v,
                                      const SandwichSpec& spec,
                                      double rel_tol = kVerdictRelTol);

// Grid scan of the pointwise coefficients over [h, h'], reporting where the
// lower one attains its minimum and the upper one its maximum; endpoint
// attainment is what operator_young_check assumes.
struct EndpointScanReport {
  double h;
  double h_prime;
  double v;
  int grid_size;
  double lower_min_x;
  double lower_min_value;
  double upper_max_x;
  double upper_max_value;
  bool lower_min_at_left;
  bool upper_max_at_right;
  bool lower_monotone;  // nondecreasing across the grid (within slack)
  bool upper_monotone;
  double worst_rel_margin;  // most negative endpoint/monotonicity slack
};

EndpointScanReport endpoint_attainment_scan(const SandwichSpec& spec, double v,
                                            int grid_size);

}  // namespace opineq
