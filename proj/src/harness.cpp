#include "opineq/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

#include "opineq/opyoung.hpp"
#include "opineq/serialize.hpp"
#include "opineq/young.hpp"

namespace opineq::harness {

void RandomSpec::validate() const {
  if (trials < 1)
    throw std::invalid_argument("RandomSpec: trials must be >= 1");
  if (dim_min < 1 || dim_min > dim_max)
    throw std::invalid_argument("RandomSpec: need 1 <= dim_min <= dim_max");
}

int random_dimension(const RandomSpec& spec, std::uint64_t trial) {
  return Rng::at(spec.seed, kStreamDimension, trial)
      .uniform_int(spec.dim_min, spec.dim_max);
}

namespace {

double dot(const std::vector<double>& u, const std::vector<double>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace

SymmetricOperator random_symmetric(const RandomSpec& spec, std::uint64_t trial,
                                   std::uint64_t stream, int n,
                                   const Interval& interval) {
  Rng rng = Rng::at(spec.seed, stream, trial);
  std::vector<double> lambda(n);
  for (double& l : lambda) l = rng.uniform(interval.lo, interval.hi);

  std::vector<std::vector<double>> q;  // orthonormal columns
  q.reserve(n);
  int redraws = 0;
  while (static_cast<int>(q.size()) < n) {
    std::vector<double> v(n);
    for (double& c : v) c = rng.normal();
    for (const auto& u : q) {
      double d = dot(u, v);
      for (int i = 0; i < n; ++i) v[i] -= d * u[i];
    }
    double norm = std::sqrt(dot(v, v));
    if (norm < 1e-8) {
      if (++redraws > 100)
        throw std::runtime_error("random_symmetric: rank-deficient draws");
      continue;
    }
    for (double& c : v) c /= norm;
    q.push_back(std::move(v));
  }

  SymmetricOperator a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += lambda[k] * q[k][i] * q[k][j];
      a.set(i, j, s);
    }
  return a;
}

SymmetricOperator random_symmetric(const RandomSpec& spec,
                                   std::uint64_t trial) {
  return random_symmetric(spec, trial, kStreamMatrix,
                          random_dimension(spec, trial), spec.interval);
}

StateVector random_unit_vector(const RandomSpec& spec, std::uint64_t trial,
                               std::uint64_t stream, int n) {
  Rng rng = Rng::at(spec.seed, stream, trial);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<double> v(n);
    for (double& c : v) c = rng.normal();
    double norm = std::sqrt(dot(v, v));
    if (norm >= 1e-8) {
      for (double& c : v) c /= norm;
      return StateVector{std::move(v)};
    }
  }
  throw std::runtime_error("random_unit_vector: degenerate draws");
}

StateVector random_unit_vector(const RandomSpec& spec, std::uint64_t trial) {
  return random_unit_vector(spec, trial, kStreamVector,
                            random_dimension(spec, trial));
}

WeightVector random_weights(const RandomSpec& spec, std::uint64_t trial,
                            int n) {
  Rng rng = Rng::at(spec.seed, kStreamWeights, trial);
  std::vector<double> w(n);
  double sum = 0.0;
  for (double& c : w) {
    c = std::abs(rng.normal());
    sum += c;
  }
  if (sum < 1e-12) {
    std::fill(w.begin(), w.end(), 1.0 / n);
  } else {
    for (double& c : w) c = std::max(c / sum, 1e-6);
    double s2 = 0.0;
    for (double c : w) s2 += c;
    for (double& c : w) c /= s2;
  }
  return WeightVector(std::move(w));
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Collects per-trial check outcomes.  Margins are relative slacks
// (difference over 1 + magnitude of the larger side); a check fails only
// when its margin is below the one-sided tolerance.
struct Checker {
  double worst = kInf;
  std::vector<std::string> failed;

  bool ok() const { return failed.empty(); }
  double margin() const { return worst == kInf ? 0.0 : worst; }

  void note(const std::string& name, double m, double tol) {
    worst = std::min(worst, m);
    if (m < -tol) failed.push_back(name);
  }
  void le(const std::string& name, double lo, double hi,
          double tol = kVerdictRelTol) {
    note(name, (hi - lo) / (1.0 + std::max(std::abs(lo), std::abs(hi))), tol);
  }
  void close(const std::string& name, double x, double y, double tol) {
    double d =
        std::abs(x - y) / (1.0 + std::max(std::abs(x), std::abs(y)));
    note(name, tol - d, 0.0);
  }
  void require(const std::string& name, bool cond, double m) {
    worst = std::min(worst, m);
    if (!cond) failed.push_back(name);
  }
};

struct TrialResult {
  bool failed = false;
  bool has_margin = false;
  double margin = 0.0;
  std::string counterexample;
};

using TrialFn = std::function<TrialResult(int)>;

TrialResult trial_result(const Checker& ck,
                         const std::function<Json()>& inputs) {
  TrialResult r;
  r.has_margin = true;
  r.margin = ck.margin();
  r.failed = !ck.ok();
  if (r.failed) {
    Json j = inputs();
    j["failed_checks"] = ck.failed;
    r.counterexample = j.dump();
  }
  return r;
}

TrialResult guarded(const TrialFn& fn, int t) {
  try {
    return fn(t);
  } catch (const std::exception& e) {
    TrialResult r;
    r.failed = true;
    r.has_margin = true;
    r.margin = -1.0;
    r.counterexample = Json{{"trial", t}, {"error", e.what()}}.dump();
    return r;
  }
}

std::vector<TrialResult> run_trials(int trials, const TrialFn& fn,
                                    ExecutionPolicy policy) {
  std::vector<TrialResult> results(trials);
#ifdef _OPENMP
  if (policy == ExecutionPolicy::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) results[t] = guarded(fn, t);
    return results;
  }
#else
  (void)policy;
#endif
  for (int t = 0; t < trials; ++t) results[t] = guarded(fn, t);
  return results;
}

SuiteReport reduce(std::string name, std::vector<TrialResult> results) {
  SuiteReport rep;
  rep.suite = std::move(name);
  rep.trials = static_cast<int>(results.size());
  double worst = kInf;
  bool any = false;
  for (auto& r : results) {
    if (r.has_margin) {
      worst = std::min(worst, r.margin);
      any = true;
    }
    if (r.failed) {
      ++rep.failures;
      if (rep.counterexamples.size() < 10)
        rep.counterexamples.push_back(std::move(r.counterexample));
    }
  }
  rep.worst_margin = any ? worst : 0.0;
  return rep;
}

// Built-in models with their convexifiers, computed once.
struct ModelSet {
  std::vector<const FunctionModel*> models;
  std::vector<Convexifier> alphas;
};

const ModelSet& builtin_set() {
  static const ModelSet set = [] {
    ModelSet s;
    for (const auto& name : builtin_model_names()) {
      s.models.push_back(&builtin_model(name));
      s.alphas.push_back(convexifier(builtin_model(name)));
    }
    return s;
  }();
  return set;
}

// Convex subset (convexifier >= -1e-9), used by pecaric-mitroi.
const ModelSet& convex_set() {
  static const ModelSet set = [] {
    ModelSet s;
    const ModelSet& all = builtin_set();
    for (std::size_t i = 0; i < all.models.size(); ++i)
      if (all.alphas[i].alpha >= -1e-9) {
        s.models.push_back(all.models[i]);
        s.alphas.push_back(all.alphas[i]);
      }
    return s;
  }();
  return set;
}

void compare_reports(Checker& ck, const std::string& tag,
                     const JensenReport& u, const JensenReport& v) {
  ck.close(tag + ":lhs", u.lhs, v.lhs, kEquivRelTol);
  ck.close(tag + ":rhs_classical", u.rhs_classical, v.rhs_classical,
           kEquivRelTol);
  ck.close(tag + ":variance", u.variance, v.variance, kEquivRelTol);
  ck.close(tag + ":rhs_refined", u.rhs_refined, v.rhs_refined, kEquivRelTol);
}

SuiteReport suite_jensen_operator(const RandomSpec& spec,
                                  ExecutionPolicy policy) {
  const ModelSet& ms = builtin_set();
  TrialFn fn = [&spec, &ms](int t) {
    std::uint64_t trial = static_cast<std::uint64_t>(t);
    int n = random_dimension(spec, trial);
    Checker ck;
    std::vector<SymmetricOperator> as;
    std::vector<StateVector> xs;
    for (std::size_t i = 0; i < ms.models.size(); ++i) {
      const FunctionModel& m = *ms.models[i];
      double alpha = ms.alphas[i].alpha;
      SymmetricOperator a =
          random_symmetric(spec, trial, kStreamAux + 2 * i, n, m.domain);
      StateVector x =
          random_unit_vector(spec, trial, kStreamAux + 2 * i + 1, n);
      JensenReport r = jensen_operator(m, alpha, a, x);
      ck.le(m.name + ":refined", r.lhs, r.rhs_refined);
      if (alpha >= -1e-9) {
        ck.le(m.name + ":sandwich", r.rhs_refined, r.rhs_classical);
        ck.le(m.name + ":classical", r.lhs, r.rhs_classical);
      }
      as.push_back(std::move(a));
      xs.push_back(std::move(x));
    }
    return trial_result(ck, [&] {
      Json inst = Json::array();
      for (std::size_t i = 0; i < ms.models.size(); ++i)
        inst.push_back(Json{{"model", ms.models[i]->name},
                            {"alpha", ms.alphas[i].alpha},
                            {"matrix", to_json(as[i])},
                            {"vector", to_json(xs[i])}});
      return Json{{"trial", t}, {"n", n}, {"instances", std::move(inst)}};
    });
  };
  return reduce("jensen-operator", run_trials(spec.trials, fn, policy));
}

SuiteReport suite_jensen_equivalence(const RandomSpec& spec,
                                     ExecutionPolicy policy) {
  const ModelSet& ms = builtin_set();
  TrialFn fn = [&spec, &ms](int t) {
    std::uint64_t trial = static_cast<std::uint64_t>(t);
    std::size_t mi = static_cast<std::size_t>(t) % ms.models.size();
    const FunctionModel& m = *ms.models[mi];
    double alpha = ms.alphas[mi].alpha;
    Rng scal = Rng::at(spec.seed, kStreamScalars, trial);
    int k = scal.uniform_int(2, 4);
    int n = random_dimension(spec, trial);
    Checker ck;

    // (a) weighted on t_i * I reduces to the scalar form.
    std::vector<double> ts(k);
    for (double& v : ts) v = scal.uniform(m.domain.lo, m.domain.hi);
    WeightVector w = random_weights(spec, trial, k);
    StateVector x = random_unit_vector(spec, trial, kStreamVector, n);
    std::vector<SymmetricOperator> consts;
    consts.reserve(k);
    for (double v : ts)
      consts.push_back(
          SymmetricOperator::diagonal(std::vector<double>(n, v)));
    compare_reports(ck, "scalar", jensen_weighted(m, alpha, consts, w, x),
                    jensen_scalar(m, alpha, ts, w));

    // (b) multi equals single on the direct sum with the stacked vector.
    std::vector<SymmetricOperator> as;
    std::vector<StateVector> xs;
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
      as.push_back(random_symmetric(
          spec, trial, kStreamAux + 2 * static_cast<std::uint64_t>(i), n,
          m.domain));
      Rng vr = Rng::at(spec.seed,
                       kStreamAux + 2 * static_cast<std::uint64_t>(i) + 1,
                       trial);
      std::vector<double> c(n);
      for (double& z : c) z = vr.normal();
      total += dot(c, c);
      xs.push_back(StateVector{std::move(c)});
    }
    total = std::sqrt(total);
    if (total < 1e-8)
      throw std::runtime_error("jensen-equivalence: degenerate stacked draw");
    std::vector<double> cat;
    for (auto& xi : xs) {
      for (double& z : xi.c) z /= total;
      cat.insert(cat.end(), xi.c.begin(), xi.c.end());
    }
    compare_reports(ck, "direct-sum", jensen_multi(m, alpha, as, xs),
                    jensen_operator(m, alpha, direct_sum(as),
                                    StateVector{std::move(cat)}));

    // (c) weighted equals multi under x_i = sqrt(p_i) x.
    std::vector<StateVector> scaled;
    for (double p : w.p) {
      StateVector xi = x;
      double s = std::sqrt(p);
      for (double& z : xi.c) z *= s;
      scaled.push_back(std::move(xi));
    }
    compare_reports(ck, "weighted", jensen_weighted(m, alpha, as, w, x),
                    jensen_multi(m, alpha, as, scaled));

    return trial_result(ck, [&] {
      Json mats = Json::array();
      for (const auto& a : as) mats.push_back(to_json(a));
      return Json{{"trial", t},   {"model", m.name}, {"alpha", alpha},
                  {"k", k},       {"n", n},          {"ts", ts},
                  {"weights", w.p}, {"x", to_json(x)}, {"matrices", mats}};
    });
  };
  return reduce("jensen-equivalence", run_trials(spec.trials, fn, policy));
}

SuiteReport suite_pecaric_mitroi(const RandomSpec& spec,
                                 ExecutionPolicy policy) {
  const ModelSet& ms = convex_set();
  TrialFn fn = [&spec, &ms](int t) {
    std::uint64_t trial = static_cast<std::uint64_t>(t);
    std::size_t mi = static_cast<std::size_t>(t) % ms.models.size();
    const FunctionModel& m = *ms.models[mi];
    Rng scal = Rng::at(spec.seed, kStreamScalars, trial);
    int k = scal.uniform_int(2, 6);
    std::vector<double> ts(k);
    for (double& v : ts) v = scal.uniform(m.domain.lo, m.domain.hi);
    WeightVector w = random_weights(spec, trial, k);
    GapBounds g = pecaric_mitroi_bounds(m, ts, w, ms.alphas[mi]);
    Checker ck;
    ck.le("lower", g.lower, g.gap);
    ck.le("upper", g.gap, g.upper);
    return trial_result(ck, [&] {
      return Json{{"trial", t}, {"model", m.name},   {"ts", ts},
                  {"weights", w.p}, {"gap", g.gap},  {"lower", g.lower},
                  {"upper", g.upper}, {"eq_gap", g.eq_gap}};
    });
  };
  return reduce("pecaric-mitroi", run_trials(spec.trials, fn, policy));
}

constexpr std::array<double, 5> kGridAB{0.01, 0.1, 1.0, 10.0, 100.0};

void check_heinz(Checker& ck, const MeanContext& c) {
  HeinzChain hc = heinz_chain(c);
  ck.le("heinz:geometric-refined", hc.geometric, hc.refined_heinz);
  ck.le("heinz:refined-heinz-arith", hc.refined_heinz, hc.refined_arith);
  ck.le("heinz:refined-arith-arith", hc.refined_arith, hc.arith);
  ck.le("heinz:dragomir", hc.dragomir_lhs, hc.dragomir_rhs);
}

SuiteReport suite_young_sandwich(ExecutionPolicy policy) {
  int trials = static_cast<int>(kGridAB.size() * kGridAB.size()) * 101;
  TrialFn fn = [](int t) {
    int iv = t % 101;
    int ib = (t / 101) % static_cast<int>(kGridAB.size());
    int ia = t / (101 * static_cast<int>(kGridAB.size()));
    MeanContext c(kGridAB[ia], kGridAB[ib], iv / 100.0);
    YoungReport yr = young_report(c);
    Checker ck;
    ck.note("young", yr.worst_rel_margin, kVerdictRelTol);
    check_heinz(ck, c);
    return trial_result(ck, [&] {
      return Json{{"trial", t},
                  {"a", c.a},
                  {"b", c.b},
                  {"v", c.v},
                  {"report", to_json(yr)}};
    });
  };
  return reduce("young-sandwich", run_trials(trials, fn, policy));
}

SuiteReport suite_young_nesting(const RandomSpec& spec,
                                ExecutionPolicy policy) {
  TrialFn fn = [&spec](int t) {
    Rng scal = Rng::at(spec.seed, kStreamScalars, static_cast<std::uint64_t>(t));
    double a = std::pow(10.0, scal.uniform(-2.0, 2.0));
    double b = std::pow(10.0, scal.uniform(-2.0, 2.0));
    double v = scal.uniform();
    MeanContext c(a, b, v);
    BoundPair cl = young_classical(c);
    BoundPair rf = young_refined(c);
    BoundPair dg = dragomir_bounds(c);
    Checker ck;
    ck.le("classical-lower-ge-1", 1.0, cl.lower);
    ck.le("lower-nesting", cl.lower, rf.lower);
    ck.le("upper-nesting", rf.upper, cl.upper);
    ck.le("dragomir-lower-improved", dg.lower, rf.lower);
    return trial_result(ck, [&] {
      return Json{{"trial", t}, {"a", a}, {"b", b}, {"v", v}};
    });
  };
  return reduce("young-nesting", run_trials(spec.trials, fn, policy));
}

constexpr std::array<const char*, 3> kNoOrderingFamilies{
    "refined-vs-dragomir-upper", "wzl-vs-refined-upper",
    "wzl-vs-refined-lower"};

SuiteReport suite_young_no_ordering(ExecutionPolicy policy) {
  // Existence assertion: each comparison family must change sign over the
  // v-grid, so neither side dominates.  One trial per family.
  TrialFn fn = [](int t) {
    double pos = -kInf, neg = -kInf;
    for (int iv = 1; iv <= 99; ++iv) {
      double v = iv / 100.0;
      double lhs, rhs;
      if (t == 0) {
        MeanContext c(2.0, 1.0, v);
        lhs = young_refined(c).upper;
        rhs = dragomir_bounds(c).upper;
      } else {
        MeanContext c(1.0, 0.1, v);
        WzlBounds wz = wzl_bounds(c);
        double tv = std::pow(wz.t, wz.v);
        if (t == 1) {
          lhs = wz.upper;
          rhs = tv * young_refined(c).upper;
        } else {
          lhs = wz.lower;
          rhs = tv * young_refined(c).lower;
        }
      }
      double d =
          (lhs - rhs) / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
      pos = std::max(pos, d);
      neg = std::max(neg, -d);
    }
    double margin = std::min(pos, neg) - 1e-12;
    Checker ck;
    ck.note(kNoOrderingFamilies[t], margin, 0.0);
    return trial_result(ck, [&] {
      return Json{{"trial", t},
                  {"family", kNoOrderingFamilies[t]},
                  {"max_positive", pos},
                  {"max_negative", neg}};
    });
  };
  return reduce("young-no-ordering",
                run_trials(static_cast<int>(kNoOrderingFamilies.size()), fn,
                           policy));
}

SuiteReport suite_heinz_chain(const RandomSpec& spec, ExecutionPolicy policy) {
  TrialFn fn = [&spec](int t) {
    Rng scal = Rng::at(spec.seed, kStreamScalars, static_cast<std::uint64_t>(t));
    double a = std::pow(10.0, scal.uniform(-2.0, 2.0));
    double b = std::pow(10.0, scal.uniform(-2.0, 2.0));
    double v = scal.uniform();
    MeanContext c(a, b, v);
    Means m = means(c);
    Checker ck;
    check_heinz(ck, c);
    // Classical interpolation: the Heinz mean sits between the geometric
    // and the (unweighted) arithmetic mean for every v.
    ck.le("geometric-heinz", std::sqrt(a * b), m.heinz);
    ck.le("heinz-arith", m.heinz, 0.5 * (a + b));
    return trial_result(ck, [&] {
      return Json{{"trial", t}, {"a", a}, {"b", b}, {"v", v}};
    });
  };
  return reduce("heinz-chain", run_trials(spec.trials, fn, policy));
}

SuiteReport suite_kantorovich_exp(ExecutionPolicy policy) {
  // 61 log-spaced ratios h = 10^(k/10), k = -30..30.
  TrialFn fn = [](int t) {
    double h = std::pow(10.0, (t - 30) / 10.0);
    KantorovichExp ke = kantorovich_vs_exp(1.0, h);
    Checker ck;
    double m = ke.difference /
               (1.0 + std::max(ke.kantorovich_value, ke.exp_value));
    ck.require("kantorovich-exp", ke.difference >= -1e-12, m);
    return trial_result(ck, [&] {
      return Json{{"trial", t},
                  {"h", h},
                  {"kantorovich", ke.kantorovich_value},
                  {"exp", ke.exp_value}};
    });
  };
  return reduce("kantorovich-exp", run_trials(61, fn, policy));
}

// Shared spectral-band recipe for the operator suites: all four thresholds
// are at least 5% apart so the bands are genuine intervals at any scale.
struct BandDraw {
  double m_prime, m, M, M_prime, v;
};

BandDraw draw_bands(Rng& scal) {
  BandDraw b;
  b.m_prime = std::pow(10.0, scal.uniform(-1.0, 1.0));
  b.m = b.m_prime * (1.05 + 0.95 * scal.uniform());
  b.M = b.m * (1.05 + 0.95 * scal.uniform());
  b.M_prime = b.M * (1.05 + 0.95 * scal.uniform());
  b.v = scal.uniform();
  return b;
}

SuiteReport suite_operator_young(const RandomSpec& spec,
                                 ExecutionPolicy policy) {
  TrialFn fn = [&spec](int t) {
    std::uint64_t trial = static_cast<std::uint64_t>(t);
    Rng scal = Rng::at(spec.seed, kStreamScalars, trial);
    BandDraw bd = draw_bands(scal);
    SandwichCondition cond =
        t % 2 == 0 ? SandwichCondition::i : SandwichCondition::ii;
    SandwichSpec sw(bd.m_prime, bd.m, bd.M, bd.M_prime, cond);
    int n = random_dimension(spec, trial);
    Interval low(bd.m_prime, bd.m), high(bd.M, bd.M_prime);
    const Interval& a_band = cond == SandwichCondition::i ? low : high;
    const Interval& b_band = cond == SandwichCondition::i ? high : low;
    SymmetricOperator a =
        random_symmetric(spec, trial, kStreamAux + 0, n, a_band);
    SymmetricOperator b =
        random_symmetric(spec, trial, kStreamAux + 1, n, b_band);
    Checker ck;
    bool in_condition = check_condition(a, b, sw);
    ck.require("condition", in_condition, in_condition ? kInf : -1.0);
    if (in_condition) {
      InequalityReport rep = operator_young_check(a, b, bd.v, sw);
      for (const auto& c : rep.checks)
        ck.require(c.name, c.holds, c.rel_margin);
    }
    return trial_result(ck, [&] {
      return Json{{"trial", t},
                  {"v", bd.v},
                  {"m_prime", bd.m_prime},
                  {"m", bd.m},
                  {"M", bd.M},
                  {"M_prime", bd.M_prime},
                  {"condition", cond == SandwichCondition::i ? "i" : "ii"},
                  {"A", to_json(a)},
                  {"B", to_json(b)}};
    });
  };
  return reduce("operator-young", run_trials(spec.trials, fn, policy));
}

SuiteReport suite_endpoint_scan(const RandomSpec& spec,
                                ExecutionPolicy policy) {
  TrialFn fn = [&spec](int t) {
    Rng scal = Rng::at(spec.seed, kStreamScalars, static_cast<std::uint64_t>(t));
    BandDraw bd = draw_bands(scal);
    SandwichSpec sw(bd.m_prime, bd.m, bd.M, bd.M_prime,
                    SandwichCondition::i);
    EndpointScanReport rep = endpoint_attainment_scan(sw, bd.v, 1000);
    Checker ck;
    ck.require("lower-min-at-left", rep.lower_min_at_left,
               rep.worst_rel_margin);
    ck.require("upper-max-at-right", rep.upper_max_at_right,
               rep.worst_rel_margin);
    ck.require("lower-monotone", rep.lower_monotone, rep.worst_rel_margin);
    ck.require("upper-monotone", rep.upper_monotone, rep.worst_rel_margin);
    return trial_result(ck, [&] {
      return Json{{"trial", t}, {"report", to_json(rep)}};
    });
  };
  return reduce("endpoint-scan", run_trials(spec.trials, fn, policy));
}

// Models exercised by expr-derivative: the built-ins plus composites that
// stress the product, chain, quotient, and general-power rules.
struct DerivModels {
  std::vector<FunctionModel> owned;
  std::vector<const FunctionModel*> all;
};

const DerivModels& deriv_models() {
  static const DerivModels dm = [] {
    DerivModels d;
    d.owned.push_back(make_model("x^2/2", Interval(-5.0, 5.0), "half-square"));
    d.owned.push_back(
        make_model("exp(sin(x))*cos(x)", Interval(0.0, 3.0), "wave"));
    d.owned.push_back(
        make_model("log(1+x^2)", Interval(-4.0, 4.0), "log-square"));
    d.owned.push_back(make_model("2^x", Interval(-2.0, 2.0), "exp2"));
    for (const auto& name : builtin_model_names())
      d.all.push_back(&builtin_model(name));
    for (const auto& m : d.owned) d.all.push_back(&m);
    return d;
  }();
  return dm;
}

SuiteReport suite_expr_derivative(const RandomSpec& spec,
                                  ExecutionPolicy policy) {
  const DerivModels& dm = deriv_models();
  TrialFn fn = [&spec, &dm](int t) {
    const FunctionModel& m =
        *dm.all[static_cast<std::size_t>(t) % dm.all.size()];
    Rng scal = Rng::at(spec.seed, kStreamScalars, static_cast<std::uint64_t>(t));
    constexpr double kStep = 1e-6;  // matches make_model's own cross-check
    constexpr double kTol = 1e-5;
    Checker ck;
    double lo = m.domain.lo, len = m.domain.length();
    std::vector<double> bad;
    for (int i = 0; i < 100; ++i) {
      double x = lo + len * (0.01 + 0.98 * scal.uniform());
      double fd1 = (m.value(x + kStep) - m.value(x - kStep)) / (2.0 * kStep);
      double fd2 = (m.deriv(x + kStep) - m.deriv(x - kStep)) / (2.0 * kStep);
      std::size_t before = ck.failed.size();
      ck.close("f1", m.deriv(x), fd1, kTol);
      ck.close("f2", m.deriv2(x), fd2, kTol);
      if (ck.failed.size() != before) bad.push_back(x);
    }
    return trial_result(ck, [&] {
      return Json{{"trial", t}, {"model", m.name}, {"points", bad}};
    });
  };
  return reduce("expr-derivative", run_trials(spec.trials, fn, policy));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "jensen-operator", "jensen-equivalence", "pecaric-mitroi",
      "young-sandwich",  "young-nesting",      "young-no-ordering",
      "heinz-chain",     "kantorovich-exp",    "operator-young",
      "endpoint-scan",   "expr-derivative"};
  return names;
}

SuiteReport run_suite(std::string_view name, const RandomSpec& config,
                      ExecutionPolicy policy) {
  config.validate();
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  if (name == "jensen-operator")
    rep = suite_jensen_operator(config, policy);
  else if (name == "jensen-equivalence")
    rep = suite_jensen_equivalence(config, policy);
  else if (name == "pecaric-mitroi")
    rep = suite_pecaric_mitroi(config, policy);
  else if (name == "young-sandwich")
    rep = suite_young_sandwich(policy);
  else if (name == "young-nesting")
    rep = suite_young_nesting(config, policy);
  else if (name == "young-no-ordering")
    rep = suite_young_no_ordering(policy);
  else if (name == "heinz-chain")
    rep = suite_heinz_chain(config, policy);
  else if (name == "kantorovich-exp")
    rep = suite_kantorovich_exp(policy);
  else if (name == "operator-young")
    rep = suite_operator_young(config, policy);
  else if (name == "endpoint-scan")
    rep = suite_endpoint_scan(config, policy);
  else if (name == "expr-derivative")
    rep = suite_expr_derivative(config, policy);
  else
    throw std::invalid_argument("unknown suite: " + std::string(name));
  auto t1 = std::chrono::steady_clock::now();
  rep.wall_time_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

}  // namespace opineq::harness
