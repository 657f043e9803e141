#include "opineq/opyoung.hpp"

#include <algorithm>
#include <cmath>

namespace opineq {

SandwichSpec::SandwichSpec(double m_prime_, double m_, double M_,
                           double M_prime_, SandwichCondition condition_)
    : m_prime(m_prime_),
      m(m_),
      M(M_),
      M_prime(M_prime_),
      condition(condition_) {
  if (!(m_prime > 0.0) || !(m_prime <= m) || !(m < M) || !(M <= M_prime))
    throw std::invalid_argument(
        "SandwichSpec: need 0 < m' <= m < M <= M'");
  if (!std::isfinite(M_prime))
    throw std::invalid_argument("SandwichSpec: bounds must be finite");
}

namespace {

// lambda_min(X - c I) >= -1e-9 * (1 + ||X - c I||_F), i.e. X >= c I.
struct PsdCheck {
  double min_eig;
  double rel_margin;
  bool holds;
};

PsdCheck psd_margin(const SymmetricOperator& diff, double rel_tol) {
  PsdCheck c;
  c.min_eig = min_eigenvalue(diff);
  c.rel_margin = c.min_eig / (1.0 + diff.frobenius_norm());
  c.holds = c.rel_margin >= -rel_tol;
  return c;
}

SymmetricOperator shift(const SymmetricOperator& a, double c, double sign) {
  // sign * (a - c I)
  int n = a.dim();
  SymmetricOperator out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      out.set(i, j, sign * (a(i, j) - (i == j ? c : 0.0)));
  return out;
}

}  // namespace

bool check_condition(const SymmetricOperator& a, const SymmetricOperator& b,
                     const SandwichSpec& spec) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("check_condition: dimension mismatch");
  const SymmetricOperator& low =
      spec.condition == SandwichCondition::i ? a : b;
  const SymmetricOperator& high =
      spec.condition == SandwichCondition::i ? b : a;
  constexpr double tol = 1e-9;
  return psd_margin(shift(low, spec.m_prime, +1.0), tol).holds &&
         psd_margin(shift(low, spec.m, -1.0), tol).holds &&
         psd_margin(shift(high, spec.M, +1.0), tol).holds &&
         psd_margin(shift(high, spec.M_prime, -1.0), tol).holds;
}

SymmetricOperator operator_geometric_mean(const SymmetricOperator& a,
                                          const SymmetricOperator& b,
                                          double v) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(
        "operator_geometric_mean: dimension mismatch");
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument("operator_geometric_mean: v must be in [0,1]");
  auto ed = eigh(a);
  if (!(ed.eigenvalues.front() > 0.0))
    throw SpectrumError(
        "operator_geometric_mean: A is not positive definite (lambda_min = " +
        std::to_string(ed.eigenvalues.front()) + ")");
  SymmetricOperator root = map_eigenvalues(ed, [](double x) {
    return std::sqrt(x);
  });
  SymmetricOperator inv_root = map_eigenvalues(ed, [](double x) {
    return 1.0 / std::sqrt(x);
  });
  SymmetricOperator t = sandwich(inv_root, b);
  auto td = eigh(t);
  double scale = 1.0 + std::abs(td.eigenvalues.back());
  if (td.eigenvalues.front() < -1e-9 * scale)
    throw SpectrumError(
        "operator_geometric_mean: inner term is not positive semidefinite "
        "(lambda_min = " +
        std::to_string(td.eigenvalues.front()) + ")");
  SymmetricOperator tv = map_eigenvalues(td, [v](double x) {
    return std::pow(std::max(x, 0.0), v);
  });
  return sandwich(root, tv);
}

double refined_coefficient_lower(double x, double v) {
  double r = std::min(v, 1.0 - v);
  double q = (1.0 - x) / std::max(1.0, x);
  return std::pow(kantorovich(x), r) *
         std::exp((v * (1.0 - v) / 2.0 - r / 4.0) * q * q);
}

double refined_coefficient_upper(double x, double v) {
  double R = std::max(v, 1.0 - v);
  double q = (1.0 - x) / std::max(1.0, x);
  return std::pow(kantorovich(x), R) *
         std::exp((v * (1.0 - v) / 2.0 - R / 4.0) * q * q);
}

InequalityReport operator_young_check(const SymmetricOperator& a,
                                      const SymmetricOperator& b, double v,
                                      const SandwichSpec& spec,
                                      double rel_tol) {
  if (!check_condition(a, b, spec))
    throw std::invalid_argument(
        "operator_young_check: (A, B) do not satisfy the spectral sandwich");
  double h = spec.h();
  double hp = spec.h_prime();
  double r = std::min(v, 1.0 - v);
  double R = std::max(v, 1.0 - v);
  double vv = v * (1.0 - v) / 2.0;

  InequalityReport rep;
  rep.v = v;
  rep.h = h;
  rep.h_prime = hp;
  rep.c_low = refined_coefficient_lower(h, v);
  rep.c_high = refined_coefficient_upper(hp, v);
  // Factor-wise bounds for the reverse coefficients: K is smallest at h /
  // largest at h', and both exp factors are extremal at h' (their exponent
  // coefficients have opposite fixed signs).
  rep.c_rev_low =
      std::pow(kantorovich(h), R) * std::exp((vv - R / 4.0) * (1.0 - hp) *
                                             (1.0 - hp));
  rep.c_rev_high =
      std::pow(kantorovich(hp), r) * std::exp((vv - r / 4.0) * (1.0 - hp) *
                                              (1.0 - hp));

  SymmetricOperator sharp = operator_geometric_mean(a, b, v);
  SymmetricOperator nabla = lincomb(1.0 - v, a, v, b);

  auto run = [&](int slot, const char* name, double coeff, double dir) {
    // dir = +1: nabla - coeff*sharp >= 0;  dir = -1: coeff*sharp - nabla >= 0.
    SymmetricOperator diff = lincomb(dir, nabla, -dir * coeff, sharp);
    PsdCheck c = psd_margin(diff, rel_tol);
    rep.checks[slot] = {name, coeff, c.min_eig, c.rel_margin, c.holds};
  };
  run(0, "refined_lower", rep.c_low, +1.0);
  run(1, "refined_upper", rep.c_high, -1.0);
  run(2, "reverse_lower", rep.c_rev_low, +1.0);
  run(3, "reverse_upper", rep.c_rev_high, -1.0);

  rep.worst_rel_margin = rep.checks[0].rel_margin;
  rep.all_hold = true;
  for (const LoewnerCheck& c : rep.checks) {
    rep.worst_rel_margin = std::min(rep.worst_rel_margin, c.rel_margin);
    rep.all_hold = rep.all_hold && c.holds;
  }
  return rep;
}

EndpointScanReport endpoint_attainment_scan(const SandwichSpec& spec, double v,
                                            int grid_size) {
  if (grid_size < 2)
    throw std::invalid_argument("endpoint_attainment_scan: grid_size >= 2");
  double h = spec.h();
  double hp = spec.h_prime();
  EndpointScanReport rep;
  rep.h = h;
  rep.h_prime = hp;
  rep.v = v;
  rep.grid_size = grid_size;

  double step = (hp - h) / (grid_size - 1);
  double lo_min = 0.0, up_max = 0.0;
  double prev_lo = 0.0, prev_up = 0.0;
  double mono_slack_lo = 0.0, mono_slack_up = 0.0;
  for (int i = 0; i < grid_size; ++i) {
    double x = i + 1 == grid_size ? hp : h + i * step;
    double lo = refined_coefficient_lower(x, v);
    double up = refined_coefficient_upper(x, v);
    if (i == 0 || lo < lo_min) {
      lo_min = lo;
      rep.lower_min_x = x;
    }
    if (i == 0 || up > up_max) {
      up_max = up;
      rep.upper_max_x = x;
    }
    if (i > 0) {
      mono_slack_lo = std::min(mono_slack_lo, lo - prev_lo);
      mono_slack_up = std::min(mono_slack_up, up - prev_up);
    }
    prev_lo = lo;
    prev_up = up;
  }
  rep.lower_min_value = lo_min;
  rep.upper_max_value = up_max;

  double left_lo = refined_coefficient_lower(h, v);
  double right_up = refined_coefficient_upper(hp, v);
  double end_slack_lo = (lo_min - left_lo) / (1.0 + std::abs(left_lo));
  double end_slack_up = (right_up - up_max) / (1.0 + std::abs(right_up));
  rep.lower_min_at_left = end_slack_lo >= -kVerdictRelTol;
  rep.upper_max_at_right = end_slack_up >= -kVerdictRelTol;
  double mono_lo_rel = mono_slack_lo / (1.0 + std::abs(lo_min));
  double mono_up_rel = mono_slack_up / (1.0 + std::abs(up_max));
  rep.lower_monotone = mono_lo_rel >= -kVerdictRelTol;
  rep.upper_monotone = mono_up_rel >= -kVerdictRelTol;
  rep.worst_rel_margin =
      std::min({end_slack_lo, end_slack_up, mono_lo_rel, mono_up_rel});
  return rep;
}

}  // namespace opineq
