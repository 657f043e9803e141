#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "opineq/expr.hpp"

namespace opineq {

// Raised when a constructed object fails its own consistency checks
// (symbolic vs. numeric derivative mismatch, broken convexity certificate).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed bounded interval [lo, hi] with lo < hi.
struct Interval {
  double lo;
  double hi;

  Interval(double lo_, double hi_);
  double length() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  // Membership with a relative slack so spectra perturbed by round-off
  // still count as inside.
  bool contains(double x, double rel_slack = 0.0) const;
};

// A twice continuously differentiable scalar function on a compact interval,
// carried as an expression tree together with its first two symbolic
// derivatives.
struct FunctionModel {
  std::string name;
  std::string source;  // original expression text
  Interval domain;
  expr::NodePtr f;
  expr::NodePtr f1;
  expr::NodePtr f2;

  double value(double x) const { return expr::evaluate(f, x); }
  double deriv(double x) const { return expr::evaluate(f1, x); }
  double deriv2(double x) const { return expr::evaluate(f2, x); }
};

// Parses `text`, differentiates twice, and cross-checks both symbolic
// derivatives against central finite differences (step 1e-6, relative
// tolerance 1e-5) on a deterministic interior grid.  Throws ParseError,
// EvalError, or ValidationError.
FunctionModel make_model(std::string_view text, Interval domain,
                         std::string name = "");

enum class ConvexifierMethod {
  analytic_grid,       // grid + golden-section minimisation of f''
  lipschitz_negation,  // alpha = -L from a Lipschitz constant of f'
  user_supplied,
};

// alpha such that f(x) - alpha/2 * x^2 is convex on the domain.
struct Convexifier {
  double alpha;
  ConvexifierMethod method;
};

// Minimises f'' over the domain on a 1001-point grid, refines the bracketing
// cell by golden-section search to 1e-10, then subtracts a safety margin of
// 1e-12*(1+|alpha|).  The certificate (midpoint convexity of f - alpha/2 x^2
// on the grid) is re-checked before returning.
Convexifier convexifier(const FunctionModel& m);

// beta = max f'' over the domain, computed the same way with the margin
// added, so that beta/2 * x^2 - f(x) is convex.
double concavifier(const FunctionModel& m);

// For f with L-Lipschitz derivative: alpha = -L is always a convexifier.
Convexifier lipschitz_convexifier(double lipschitz_bound);

Convexifier user_convexifier(double alpha);

// Built-in models: "sin" on [0, 2pi], "exp" on [0, 1], "neglog" on [1, 2],
// "pow4" on [-1, 1].  Constructed once, immutable afterwards.
const FunctionModel& builtin_model(std::string_view name);
const std::vector<std::string>& builtin_model_names();

}  // namespace opineq
