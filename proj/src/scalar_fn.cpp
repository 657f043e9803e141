#include "opineq/scalar_fn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace opineq {

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("Interval: endpoints must be finite");
  if (!(lo < hi)) throw std::invalid_argument("Interval: requires lo < hi");
}

bool Interval::contains(double x, double rel_slack) const {
  double slack = rel_slack * (1.0 + std::max(std::abs(lo), std::abs(hi)));
  return x >= lo - slack && x <= hi + slack;
}

namespace {

constexpr int kGridPoints = 1001;
constexpr double kFdStep = 1e-6;
constexpr double kFdRelTol = 1e-5;

void check_against_fd(const expr::NodePtr& fn, const expr::NodePtr& dfn,
                      const Interval& dom, const char* what) {
  for (int i = 0; i < 100; ++i) {
    double x = dom.lo + dom.length() * (i + 0.5) / 100.0;
    double sym = expr::evaluate(dfn, x);
    double fd = (expr::evaluate(fn, x + kFdStep) -
                 expr::evaluate(fn, x - kFdStep)) /
                (2.0 * kFdStep);
    if (!std::isfinite(sym) || !std::isfinite(fd))
      throw ValidationError(std::string(what) + ": non-finite value near x=" +
                            std::to_string(x));
    if (std::abs(sym - fd) > kFdRelTol * (1.0 + std::abs(sym) + std::abs(fd)))
      throw ValidationError(std::string(what) +
                            ": symbolic and finite-difference derivatives "
                            "disagree near x=" +
                            std::to_string(x));
  }
}

std::vector<double> domain_grid(const Interval& dom) {
  std::vector<double> xs(kGridPoints);
  double step = dom.length() / (kGridPoints - 1);
  for (int i = 0; i < kGridPoints; ++i) xs[i] = dom.lo + i * step;
  xs.back() = dom.hi;
  return xs;
}

// Golden-section minimisation; returns the smallest sampled value.
template <class F>
double golden_min(F&& g, double a, double b, double xtol) {
  constexpr double invphi = 0.6180339887498949;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = g(c);
  double fd = g(d);
  double best = std::min(fc, fd);
  while (b - a > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = g(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = g(d);
    }
    best = std::min({best, fc, fd});
  }
  return best;
}

// Smallest (sign = +1) or largest (sign = -1) value of f'' over the domain:
// coarse grid, then golden-section refinement of the bracketing cell.
double extremal_second_derivative(const FunctionModel& m, double sign) {
  std::vector<double> xs = domain_grid(m.domain);
  std::vector<double> g(kGridPoints);
  double scale = 1.0;
  for (int i = 0; i < kGridPoints; ++i) {
    g[i] = sign * m.deriv2(xs[i]);
    if (!std::isfinite(g[i]))
      throw expr::EvalError("non-finite second derivative at x=" +
                            std::to_string(xs[i]));
    scale = std::max(scale, std::abs(g[i]));
  }
  auto [mn, mx] = std::minmax_element(g.begin(), g.end());
  double lowest = *mn;
  if (*mx - lowest >= 1e-14 * scale) {
    int i = static_cast<int>(mn - g.begin());
    double lo = xs[std::max(0, i - 1)];
    double hi = xs[std::min(kGridPoints - 1, i + 1)];
    lowest = std::min(
        lowest, golden_min([&](double x) { return sign * m.deriv2(x); }, lo,
                           hi, 1e-10));
  }
  return sign * lowest;
}

// Midpoint-convexity certificate for f(x) - alpha/2 x^2 (sign = +1) or
// alpha/2 x^2 - f(x) (sign = -1) on the sampling grid.
void certify_convexity(const FunctionModel& m, double alpha, double sign) {
  std::vector<double> xs = domain_grid(m.domain);
  std::vector<double> phi(kGridPoints);
  double scale = 1.0;
  for (int i = 0; i < kGridPoints; ++i) {
    phi[i] = sign * (m.value(xs[i]) - 0.5 * alpha * xs[i] * xs[i]);
    scale = std::max(scale, std::abs(phi[i]));
  }
  double tol = 1e-9 * (1.0 + scale);
  for (int i = 0; i < kGridPoints; ++i)
    for (int j = i + 2; j < kGridPoints; j += 2)
      if (phi[(i + j) / 2] > 0.5 * (phi[i] + phi[j]) + tol)
        throw ValidationError(
            "convexity certificate failed for model " + m.name +
            " between x=" + std::to_string(xs[i]) +
            " and x=" + std::to_string(xs[j]));
}

}  // namespace

FunctionModel make_model(std::string_view text, Interval domain,
                         std::string name) {
  FunctionModel m{name.empty() ? std::string(text) : std::move(name),
                  std::string(text), domain, expr::parse(text), nullptr,
                  nullptr};
  m.f1 = expr::differentiate(m.f);
  m.f2 = expr::differentiate(m.f1);
  check_against_fd(m.f, m.f1, domain, "first derivative");
  check_against_fd(m.f1, m.f2, domain, "second derivative");
  return m;
}

Convexifier convexifier(const FunctionModel& m) {
  double a0 = extremal_second_derivative(m, +1.0);
  double alpha = a0 - 1e-12 * (1.0 + std::abs(a0));
  certify_convexity(m, alpha, +1.0);
  return {alpha, ConvexifierMethod::analytic_grid};
}

double concavifier(const FunctionModel& m) {
  double b0 = extremal_second_derivative(m, -1.0);
  double beta = b0 + 1e-12 * (1.0 + std::abs(b0));
  certify_convexity(m, beta, -1.0);
  return beta;
}

Convexifier lipschitz_convexifier(double lipschitz_bound) {
  if (!(lipschitz_bound >= 0.0) || !std::isfinite(lipschitz_bound))
    throw std::invalid_argument(
        "lipschitz_convexifier: bound must be finite and nonnegative");
  return {-lipschitz_bound, ConvexifierMethod::lipschitz_negation};
}

Convexifier user_convexifier(double alpha) {
  if (!std::isfinite(alpha))
    throw std::invalid_argument("user_convexifier: alpha must be finite");
  return {alpha, ConvexifierMethod::user_supplied};
}

const FunctionModel& builtin_model(std::string_view name) {
  static const std::map<std::string, FunctionModel, std::less<>> registry = [] {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::map<std::string, FunctionModel, std::less<>> reg;
    reg.emplace("sin", make_model("sin(x)", {0.0, two_pi}, "sin"));
    reg.emplace("exp", make_model("exp(x)", {0.0, 1.0}, "exp"));
    reg.emplace("neglog", make_model("0 - log(x)", {1.0, 2.0}, "neglog"));
    reg.emplace("pow4", make_model("x^4", {-1.0, 1.0}, "pow4"));
    return reg;
  }();
  auto it = registry.find(name);
  if (it == registry.end())
    throw std::invalid_argument("unknown model '" + std::string(name) + "'");
  return it->second;
}

const std::vector<std::string>& builtin_model_names() {
  static const std::vector<std::string> names{"sin", "exp", "neglog", "pow4"};
  return names;
}

}  // namespace opineq
