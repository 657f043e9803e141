#include "opineq/young.hpp"

#include <algorithm>
#include <cmath>

namespace opineq {

double kantorovich(double h) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw std::invalid_argument("kantorovich: h must be positive");
  return (h + 1.0) * (h + 1.0) / (4.0 * h);
}

MeanContext::MeanContext(double a_, double b_, double v_)
    : a(a_), b(b_), v(v_) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("MeanContext: a, b must be positive");
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument("MeanContext: v must lie in [0, 1]");
  h = b / a;
  d = std::min(a, b);
  D = std::max(a, b);
  r = std::min(v, 1.0 - v);
  R = std::max(v, 1.0 - v);
}

Means means(const MeanContext& c) {
  Means m;
  m.nabla = (1.0 - c.v) * c.a + c.v * c.b;
  m.sharp = std::pow(c.a, 1.0 - c.v) * std::pow(c.b, c.v);
  m.heinz = 0.5 * (m.sharp + std::pow(c.b, 1.0 - c.v) * std::pow(c.a, c.v));
  return m;
}

BoundPair young_classical(const MeanContext& c) {
  double k = kantorovich(c.h);
  return {std::pow(k, c.r), std::pow(k, c.R)};
}

BoundPair young_refined(const MeanContext& c) {
  double k = kantorovich(c.h);
  double q = (c.a - c.b) / c.D;
  double q2 = q * q;
  double vv = c.v * (1.0 - c.v) / 2.0;
  return {std::pow(k, c.r) * std::exp((vv - c.r / 4.0) * q2),
          std::pow(k, c.R) * std::exp((vv - c.R / 4.0) * q2)};
}

BoundPair young_reverse(const MeanContext& c) {
  double k = kantorovich(c.h);
  double q = (c.a - c.b) / c.d;
  double q2 = q * q;
  double vv = c.v * (1.0 - c.v) / 2.0;
  return {std::pow(k, c.R) * std::exp((vv - c.R / 4.0) * q2),
          std::pow(k, c.r) * std::exp((vv - c.r / 4.0) * q2)};
}

BoundPair dragomir_bounds(const MeanContext& c) {
  double vv = c.v * (1.0 - c.v) / 2.0;
  double qD = (c.a - c.b) / c.D;
  double qd = (c.a - c.b) / c.d;
  return {std::exp(vv * qD * qD), std::exp(vv * qd * qd)};
}

WzlBounds wzl_bounds(const MeanContext& c) {
  double big = c.D;
  double small = c.d;
  double vv = c.a >= c.b ? c.v : 1.0 - c.v;
  WzlBounds w;
  w.t = small / big;
  w.v = vv;
  w.mid = (1.0 - vv) + vv * w.t;
  double st = std::sqrt(w.t);
  double k = kantorovich(st);
  double rp = std::min(2.0 * c.r, 1.0 - 2.0 * c.r);
  double Rp = std::max(2.0 * c.r, 1.0 - 2.0 * c.r);
  double tv = std::pow(w.t, vv);
  double corr = c.r * (1.0 - st) * (1.0 - st);
  w.lower = std::pow(k, rp) * tv + corr;
  w.upper = std::pow(k, Rp) * tv + corr;
  return w;
}

HeinzChain heinz_chain(const MeanContext& c) {
  HeinzChain hc;
  Means m = means(c);
  double lg = std::log(c.a / c.b);
  double onem2v = 1.0 - 2.0 * c.v;
  hc.geometric = std::sqrt(c.a * c.b);
  hc.heinz = m.heinz;
  hc.refined_heinz = m.heinz - (c.d / 8.0) * (onem2v * lg) * (onem2v * lg);
  hc.arith = 0.5 * (c.a + c.b);
  hc.refined_arith = hc.arith - (c.d / 8.0) * lg * lg;
  hc.dragomir_lhs = (c.d / 8.0) * lg * lg;
  hc.dragomir_rhs = hc.arith - hc.geometric;
  return hc;
}

KantorovichExp kantorovich_vs_exp(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("kantorovich_vs_exp: a, b must be positive");
  KantorovichExp k;
  double q = (a - b) / std::max(a, b);
  k.kantorovich_value = kantorovich(b / a);
  k.exp_value = std::exp(q * q / 4.0);
  k.difference = k.kantorovich_value - k.exp_value;
  return k;
}

RouteBounds derivation_route_bounds(const MeanContext& c) {
  double w1 = 1.0 - c.v;
  double w2 = c.v;
  double eq_gap =
      std::log(0.5 * (c.a + c.b)) - 0.5 * (std::log(c.a) + std::log(c.b));
  double mean_w = w1 * c.a + w2 * c.b;
  double var_w = w1 * c.a * c.a + w2 * c.b * c.b - mean_w * mean_w;
  double mean_eq = 0.5 * (c.a + c.b);
  double var_eq = 0.5 * (c.a * c.a + c.b * c.b) - mean_eq * mean_eq;
  double alpha = 1.0 / (c.D * c.D);
  double beta = 1.0 / (c.d * c.d);
  RouteBounds rb;
  rb.refined_lower =
      std::exp(2.0 * c.r * eq_gap + 0.5 * alpha * (var_w - 2.0 * c.r * var_eq));
  rb.refined_upper =
      std::exp(2.0 * c.R * eq_gap + 0.5 * alpha * (var_w - 2.0 * c.R * var_eq));
  rb.reverse_upper =
      std::exp(2.0 * c.r * eq_gap + 0.5 * beta * (var_w - 2.0 * c.r * var_eq));
  rb.reverse_lower =
      std::exp(2.0 * c.R * eq_gap + 0.5 * beta * (var_w - 2.0 * c.R * var_eq));
  return rb;
}

std::vector<RemarkComparison> compare_remarks() {
  std::vector<RemarkComparison> out;
  auto push = [&out](std::string name, double computed, double reference) {
    out.push_back({std::move(name), computed, reference, computed - reference});
  };
  for (auto [v, ref] : {std::pair{0.1, 0.0168761}, std::pair{0.3, -0.0436069}}) {
    MeanContext c(2.0, 1.0, v);
    push("refined-vs-dragomir-upper-v" + std::to_string(v).substr(0, 4),
         young_refined(c).upper - dragomir_bounds(c).upper, ref);
  }
  // Additive comparison at t = 0.1: wzl bound minus t^v times the refined
  // ratio bound (both bound (1-v) + vt from the same side).
  const double upper_refs[2] = {0.0363059, -0.0860004};
  const double lower_refs[2] = {-0.0126828, 0.037896};
  const double vs[2] = {0.45, 0.9};
  for (int side = 0; side < 2; ++side)
    for (int i = 0; i < 2; ++i) {
      MeanContext c(1.0, 0.1, vs[i]);
      WzlBounds w = wzl_bounds(c);
      BoundPair refined = young_refined(c);
      double tv = std::pow(0.1, vs[i]);
      std::string name = side == 0 ? "wzl-vs-refined-upper-v"
                                   : "wzl-vs-refined-lower-v";
      name += std::to_string(vs[i]).substr(0, 4);
      if (side == 0)
        push(std::move(name), w.upper - tv * refined.upper, upper_refs[i]);
      else
        push(std::move(name), w.lower - tv * refined.lower, lower_refs[i]);
    }
  return out;
}

YoungReport young_report(const MeanContext& c, double rel_tol) {
  YoungReport rep;
  rep.a = c.a;
  rep.b = c.b;
  rep.v = c.v;
  Means m = means(c);
  rep.nabla = m.nabla;
  rep.sharp = m.sharp;
  rep.heinz = m.heinz;
  rep.ratio = m.nabla / m.sharp;
  if (rep.nabla < rep.sharp - 1e-12 * (1.0 + std::abs(rep.nabla)))
    throw ValidationError("young_report: nabla < sharp");

  auto add = [&](const char* family, const char* side, double value,
                 double target) {
    BoundEntry e;
    e.family = family;
    e.side = side;
    e.value = value;
    e.margin = side[0] == 'l' ? target - value : value - target;
    // An overflowed bound (value = +inf on an upper side) still holds
    // trivially; dividing inf by inf would poison the verdict with NaN, so
    // an infinite margin keeps its sign instead of being normalised.
    e.rel_margin =
        std::isfinite(e.margin)
            ? e.margin / (1.0 + std::max(std::abs(target), std::abs(value)))
            : e.margin;
    e.holds = e.rel_margin >= -rel_tol;
    rep.bounds.push_back(std::move(e));
  };

  BoundPair cl = young_classical(c);
  BoundPair rf = young_refined(c);
  BoundPair rv = young_reverse(c);
  BoundPair dg = dragomir_bounds(c);
  WzlBounds wz = wzl_bounds(c);
  add("classical", "lower", cl.lower, rep.ratio);
  add("classical", "upper", cl.upper, rep.ratio);
  add("refined", "lower", rf.lower, rep.ratio);
  add("refined", "upper", rf.upper, rep.ratio);
  add("reverse", "lower", rv.lower, rep.ratio);
  add("reverse", "upper", rv.upper, rep.ratio);
  add("dragomir", "lower", dg.lower, rep.ratio);
  add("dragomir", "upper", dg.upper, rep.ratio);
  add("wzl", "lower", wz.lower, wz.mid);
  add("wzl", "upper", wz.upper, wz.mid);

  rep.worst_rel_margin = rep.bounds.front().rel_margin;
  rep.all_hold = true;
  for (const BoundEntry& e : rep.bounds) {
    rep.worst_rel_margin = std::min(rep.worst_rel_margin, e.rel_margin);
    rep.all_hold = rep.all_hold && e.holds;
  }
  return rep;
}

}  // namespace opineq
