#include "opineq/jensen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace opineq {

WeightVector::WeightVector(std::vector<double> weights) : p(std::move(weights)) {
  if (p.empty()) throw std::invalid_argument("WeightVector: empty");
  double sum = 0.0;
  for (double w : p) {
    if (!(w > 0.0) || !std::isfinite(w))
      throw std::invalid_argument("WeightVector: weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("WeightVector: weights must sum to 1, got " +
                                std::to_string(sum));
}

namespace {

JensenReport finish_report(double lhs, double rhs_classical, double variance,
                           double alpha, double rel_tol) {
  JensenReport r;
  r.lhs = lhs;
  r.rhs_classical = rhs_classical;
  r.variance = variance;
  r.alpha = alpha;
  r.rhs_refined = rhs_classical - 0.5 * alpha * variance;
  r.margin_refined = r.rhs_refined - lhs;
  r.margin_classical = rhs_classical - lhs;
  r.holds_refined =
      r.margin_refined >=
      -rel_tol * (1.0 + std::abs(lhs) + std::abs(r.rhs_refined));
  r.holds_classical =
      r.margin_classical >=
      -rel_tol * (1.0 + std::abs(lhs) + std::abs(rhs_classical));
  return r;
}

void require_unit(const StateVector& x, const char* who) {
  if (std::abs(x.norm() - 1.0) > 1e-12)
    throw std::invalid_argument(std::string(who) +
                                ": state vector must have unit norm");
}

double value_clamped(const FunctionModel& m, double t) {
  return m.value(std::clamp(t, m.domain.lo, m.domain.hi));
}

void require_in_domain(const FunctionModel& m, double t, const char* who) {
  if (!m.domain.contains(t, kVerdictRelTol)) {
    std::ostringstream os;
    os << who << ": sample point " << t << " outside domain [" << m.domain.lo
       << ", " << m.domain.hi << "] of model " << m.name;
    throw SpectrumError(os.str());
  }
}

}  // namespace

JensenReport jensen_operator(const FunctionModel& m, double alpha,
                             const SymmetricOperator& a, const StateVector& x,
                             double rel_tol) {
  if (a.dim() != x.dim())
    throw std::invalid_argument("jensen_operator: dimension mismatch");
  require_unit(x, "jensen_operator");
  auto ed = eigh(a);
  SymmetricOperator fa = apply_function(m, ed);
  double s1 = quadratic_form(a, x);
  double sf = quadratic_form(fa, x);
  double s2 = quadratic_form(square(a), x);
  return finish_report(value_clamped(m, s1), sf, s2 - s1 * s1, alpha, rel_tol);
}

JensenReport jensen_multi(const FunctionModel& m, double alpha,
                          std::span<const SymmetricOperator> as,
                          std::span<const StateVector> xs, double rel_tol) {
  if (as.empty() || as.size() != xs.size())
    throw std::invalid_argument(
        "jensen_multi: need matching nonempty operator and vector lists");
  double total = 0.0;
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (as[i].dim() != xs[i].dim())
      throw std::invalid_argument("jensen_multi: dimension mismatch at index " +
                                  std::to_string(i));
    double nrm = xs[i].norm();
    total += nrm * nrm;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument(
        "jensen_multi: vector norms must satisfy sum ||x_i||^2 = 1, got " +
        std::to_string(total));
  double s1 = 0.0, sf = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < as.size(); ++i) {
    SymmetricOperator fa = apply_function(m, as[i]);
    s1 += quadratic_form(as[i], xs[i]);
    sf += quadratic_form(fa, xs[i]);
    s2 += quadratic_form(square(as[i]), xs[i]);
  }
  return finish_report(value_clamped(m, s1), sf, s2 - s1 * s1, alpha, rel_tol);
}

JensenReport jensen_weighted(const FunctionModel& m, double alpha,
                             std::span<const SymmetricOperator> as,
                             const WeightVector& w, const StateVector& x,
                             double rel_tol) {
  if (as.empty() || as.size() != w.p.size())
    throw std::invalid_argument(
        "jensen_weighted: need one weight per operator");
  for (const auto& a : as)
    if (a.dim() != x.dim())
      throw std::invalid_argument("jensen_weighted: dimension mismatch");
  require_unit(x, "jensen_weighted");
  double s1 = 0.0, sf = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < as.size(); ++i) {
    SymmetricOperator fa = apply_function(m, as[i]);
    s1 += w.p[i] * quadratic_form(as[i], x);
    sf += w.p[i] * quadratic_form(fa, x);
    s2 += w.p[i] * quadratic_form(square(as[i]), x);
  }
  return finish_report(value_clamped(m, s1), sf, s2 - s1 * s1, alpha, rel_tol);
}

JensenReport jensen_scalar(const FunctionModel& m, double alpha,
                           std::span<const double> ts, const WeightVector& w,
                           double rel_tol) {
  if (ts.empty() || ts.size() != w.p.size())
    throw std::invalid_argument("jensen_scalar: need one weight per point");
  double s1 = 0.0, sf = 0.0, s2 = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    require_in_domain(m, ts[i], "jensen_scalar");
    double t = std::clamp(ts[i], m.domain.lo, m.domain.hi);
    s1 += w.p[i] * t;
    sf += w.p[i] * m.value(t);
    s2 += w.p[i] * t * t;
  }
  return finish_report(value_clamped(m, s1), sf, s2 - s1 * s1, alpha, rel_tol);
}

GapBounds pecaric_mitroi_bounds(const FunctionModel& m,
                                std::span<const double> ts,
                                const WeightVector& w,
                                const Convexifier& alpha) {
  if (alpha.alpha < -1e-9)
    throw std::invalid_argument(
        "pecaric_mitroi_bounds: model is not convex (convexifier " +
        std::to_string(alpha.alpha) + ")");
  if (ts.empty() || ts.size() != w.p.size())
    throw std::invalid_argument(
        "pecaric_mitroi_bounds: need one weight per point");
  const auto n = static_cast<double>(ts.size());
  double mean_w = 0.0, mean_eq = 0.0, fsum_w = 0.0, fsum_eq = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    require_in_domain(m, ts[i], "pecaric_mitroi_bounds");
    double t = std::clamp(ts[i], m.domain.lo, m.domain.hi);
    double ft = m.value(t);
    mean_w += w.p[i] * t;
    fsum_w += w.p[i] * ft;
    mean_eq += t / n;
    fsum_eq += ft / n;
  }
  auto [mn, mx] = std::minmax_element(w.p.begin(), w.p.end());
  GapBounds g;
  g.gap = fsum_w - value_clamped(m, mean_w);
  g.eq_gap = fsum_eq - value_clamped(m, mean_eq);
  g.lower = n * *mn * g.eq_gap;
  g.upper = n * *mx * g.eq_gap;
  return g;
}

GapBounds pecaric_mitroi_bounds(const FunctionModel& m,
                                std::span<const double> ts,
                                const WeightVector& w) {
  return pecaric_mitroi_bounds(m, ts, w, convexifier(m));
}

std::vector<SinScanRow> sin_example_scan(std::span<const double> p_grid) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<SinScanRow> rows;
  rows.reserve(p_grid.size());
  for (double p : p_grid) {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("sin_example_scan: p must lie in [0, 1]");
    SinScanRow row;
    row.p = p;
    row.lhs = std::sin(two_pi * (1.0 - p));
    row.bound_classical = 0.0;
    row.bound_refined = 2.0 * std::numbers::pi * std::numbers::pi * p *
                        (1.0 - p);
    row.holds_classical =
        row.lhs <= row.bound_classical +
                       kVerdictRelTol * (1.0 + std::abs(row.lhs));
    row.holds_refined =
        row.lhs <= row.bound_refined +
                       kVerdictRelTol *
                           (1.0 + std::abs(row.lhs) + row.bound_refined);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace opineq
