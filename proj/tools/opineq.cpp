#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opineq/harness.hpp"
#include "opineq/jensen.hpp"
#include "opineq/opyoung.hpp"
#include "opineq/scalar_fn.hpp"
#include "opineq/serialize.hpp"
#include "opineq/young.hpp"

namespace {

using opineq::Json;

enum class Format { pretty, json, csv };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return Format::pretty;
}

// Config and file problems exit 2; mathematical failures exit 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_endpoint(const std::string& s) {
  if (s == "2pi") return 2.0 * std::numbers::pi;
  double v{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw UsageError("bad interval endpoint '" + s +
                     "' (expected a decimal number or 2pi)");
  return v;
}

opineq::Interval parse_interval(const std::vector<std::string>& ends) {
  double lo = parse_endpoint(ends.at(0));
  double hi = parse_endpoint(ends.at(1));
  if (!(lo < hi)) throw UsageError("interval endpoints must satisfy lo < hi");
  return opineq::Interval(lo, hi);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string sci2(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << x;
  return os.str();
}

// ---- output ---------------------------------------------------------------

std::string pretty_scalar(const Json& j) {
  if (j.is_number_float()) return opineq::sig6(j.get<double>());
  if (j.is_boolean()) return j.get<bool>() ? "yes" : "no";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat_object(const Json& j) {
  if (!j.is_object()) return false;
  return std::all_of(j.begin(), j.end(),
                     [](const Json& v) { return is_scalar(v); });
}

std::string inline_object(const Json& j) {
  std::string out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!out.empty()) out += "  ";
    out += it.key() + "=" + pretty_scalar(it.value());
  }
  return out;
}

void print_pretty(std::ostream& os, const Json& j, int indent = 0) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (is_scalar(v)) {
        os << pad << it.key() << ": " << pretty_scalar(v) << "\n";
      } else if (v.is_array() &&
                 std::all_of(v.begin(), v.end(),
                             [](const Json& e) { return is_scalar(e); })) {
        os << pad << it.key() << ": [";
        for (std::size_t i = 0; i < v.size(); ++i)
          os << (i ? ", " : "") << pretty_scalar(v[i]);
        os << "]\n";
      } else {
        os << pad << it.key() << ":\n";
        print_pretty(os, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const Json& v : j) {
      if (is_scalar(v)) {
        os << pad << "- " << pretty_scalar(v) << "\n";
      } else if (is_flat_object(v)) {
        os << pad << "- " << inline_object(v) << "\n";
      } else {
        os << pad << "-\n";
        print_pretty(os, v, indent + 2);
      }
    }
  } else {
    os << pad << pretty_scalar(j) << "\n";
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_cell(const Json& j) {
  if (j.is_number_float()) return opineq::sig17(j.get<double>());
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_string()) return csv_quote(j.get<std::string>());
  if (j.is_number()) return j.dump();
  return csv_quote(j.dump());
}

void flatten_csv(std::ostream& os, const Json& j, const std::string& path) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten_csv(os, it.value(),
                  path.empty() ? it.key() : path + "." + it.key());
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten_csv(os, j[i], path + "[" + std::to_string(i) + "]");
  } else {
    os << path << "," << csv_cell(j) << "\n";
  }
}

void emit(Format f, const Json& j) {
  if (f == Format::json)
    std::cout << j.dump(2) << "\n";
  else if (f == Format::csv)
    flatten_csv(std::cout, j, "");
  else
    print_pretty(std::cout, j);
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Json>> rows;
};

void emit_table(Format f, const Table& t) {
  if (f == Format::json) {
    Json arr = Json::array();
    for (const auto& row : t.rows) {
      Json obj;
      for (std::size_t c = 0; c < t.header.size(); ++c)
        obj[t.header[c]] = row[c];
      arr.push_back(std::move(obj));
    }
    std::cout << arr.dump(2) << "\n";
    return;
  }
  if (f == Format::csv) {
    for (std::size_t c = 0; c < t.header.size(); ++c)
      std::cout << (c ? "," : "") << t.header[c];
    std::cout << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        std::cout << (c ? "," : "") << csv_cell(row[c]);
      std::cout << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(t.header.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t c = 0; c < t.header.size(); ++c)
    width[c] = t.header[c].size();
  for (const auto& row : t.rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line.push_back(pretty_scalar(row[c]));
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  for (std::size_t c = 0; c < t.header.size(); ++c)
    std::cout << (c ? "  " : "") << std::left << std::setw(int(width[c]))
              << t.header[c];
  std::cout << "\n";
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c)
      std::cout << (c ? "  " : "") << std::left << std::setw(int(width[c]))
                << line[c];
    std::cout << "\n";
  }
}

// ---- commands -------------------------------------------------------------

int cmd_reproduce(Format f) {
  std::vector<opineq::RemarkComparison> cs = opineq::compare_remarks();
  std::vector<double> grid(101);
  for (int i = 0; i <= 100; ++i) grid[i] = i / 100.0;
  std::vector<opineq::SinScanRow> rows = opineq::sin_example_scan(grid);

  bool deltas_ok = true;
  for (const auto& c : cs) deltas_ok = deltas_ok && std::abs(c.delta) <= 1e-6;
  bool refined_ok = true;
  int fail_count = 0;
  double fail_lo = 0.0, fail_hi = 0.0;
  for (const auto& r : rows) {
    refined_ok = refined_ok && r.holds_refined;
    if (!r.holds_classical) {
      if (fail_count == 0) fail_lo = r.p;
      fail_hi = r.p;
      ++fail_count;
    }
  }
  bool pass = deltas_ok && refined_ok;

  if (f == Format::pretty) {
    std::cout << "published comparisons (|delta| <= 1e-6 required):\n";
    for (const auto& c : cs)
      std::cout << "  " << std::left << std::setw(34) << c.name
                << "  computed " << std::setw(12) << opineq::sig6(c.computed)
                << "  reference " << std::setw(10) << opineq::sig6(c.reference)
                << "  delta " << sci2(c.delta) << "\n";
    std::cout << "sin example scan (p = 0, 0.01, ..., 1):\n";
    std::cout << "  refined bound holds at every p: "
              << (refined_ok ? "yes" : "NO") << "\n";
    if (fail_count > 0)
      std::cout << "  classical bound fails at " << fail_count
                << " points, p in [" << opineq::sig6(fail_lo) << ", "
                << opineq::sig6(fail_hi) << "]\n";
    else
      std::cout << "  classical bound fails nowhere\n";
    std::cout << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  } else {
    Json out{{"comparisons",
              opineq::to_json(std::span<const opineq::RemarkComparison>(cs))},
             {"classical_failures",
              Json{{"count", fail_count},
                   {"first_p", fail_lo},
                   {"last_p", fail_hi}}},
             {"refined_holds_everywhere", refined_ok},
             {"deltas_within_tolerance", deltas_ok},
             {"pass", pass},
             {"scan", opineq::to_json(std::span<const opineq::SinScanRow>(
                          rows))}};
    emit(f, out);
  }
  return pass ? 0 : 1;
}

struct JensenOpts {
  std::string function;
  std::string builtin;
  std::vector<std::string> interval;
  std::vector<std::string> matrices;
  std::string vector_file;
  std::string weights_file;
  std::optional<double> alpha;
  std::optional<double> lipschitz;
};

int cmd_verify_jensen(Format f, double tol, const JensenOpts& o) {
  std::optional<opineq::FunctionModel> owned;
  const opineq::FunctionModel* m = nullptr;
  if (!o.builtin.empty()) {
    m = &opineq::builtin_model(o.builtin);
  } else {
    if (o.function.empty())
      throw UsageError("need --function EXPR or --builtin NAME");
    if (o.interval.size() != 2)
      throw UsageError("--function requires --interval LO HI");
    try {
      owned = opineq::make_model(o.function, parse_interval(o.interval),
                                 "user");
    } catch (const opineq::expr::ParseError& e) {
      throw UsageError(std::string("--function: ") + e.what());
    }
    m = &*owned;
  }

  double alpha;
  if (o.alpha)
    alpha = *o.alpha;
  else if (o.lipschitz)
    alpha = opineq::lipschitz_convexifier(*o.lipschitz).alpha;
  else
    alpha = opineq::convexifier(*m).alpha;

  opineq::StateVector x =
      opineq::vector_from_json(load_json_file(o.vector_file));

  opineq::JensenReport rep;
  if (o.matrices.size() == 1 && o.weights_file.empty()) {
    rep = opineq::jensen_operator(
        *m, alpha, opineq::operator_from_json(load_json_file(o.matrices[0])),
        x, tol);
  } else {
    if (o.weights_file.empty())
      throw UsageError("several --matrix files need --weights FILE");
    std::vector<opineq::SymmetricOperator> as;
    for (const auto& path : o.matrices)
      as.push_back(opineq::operator_from_json(load_json_file(path)));
    opineq::WeightVector w(
        load_json_file(o.weights_file).get<std::vector<double>>());
    rep = opineq::jensen_weighted(*m, alpha, as, w, x, tol);
  }

  Json out{{"model", m->name}};
  Json fields = opineq::to_json(rep);
  for (auto& [k, v] : fields.items()) out[k] = v;
  emit(f, out);
  return rep.holds_refined ? 0 : 1;
}

int cmd_verify_young(Format f, double tol, double a, double b, double v) {
  opineq::YoungReport yr = opineq::young_report(opineq::MeanContext(a, b, v),
                                                tol);
  emit(f, opineq::to_json(yr));
  return yr.all_hold ? 0 : 1;
}

int cmd_verify_heinz(Format f, double tol, double a, double b, double v) {
  opineq::MeanContext c(a, b, v);
  opineq::HeinzChain hc = opineq::heinz_chain(c);
  auto rel = [](double lo, double hi) {
    return (hi - lo) / (1.0 + std::max(std::abs(lo), std::abs(hi)));
  };
  double worst = std::min({rel(hc.geometric, hc.refined_heinz),
                           rel(hc.refined_heinz, hc.refined_arith),
                           rel(hc.refined_arith, hc.arith),
                           rel(hc.dragomir_lhs, hc.dragomir_rhs)});
  bool ok = worst >= -tol;
  Json out = opineq::to_json(hc);
  out["worst_rel_margin"] = worst;
  out["holds"] = ok;
  emit(f, out);
  return ok ? 0 : 1;
}

struct OpYoungOpts {
  std::vector<std::string> matrices;
  double v = 0.5;
  double m_prime = 0.0, m = 0.0, M = 0.0, M_prime = 0.0;
  std::string condition = "i";
};

int cmd_verify_operator_young(Format f, double tol, const OpYoungOpts& o) {
  opineq::SymmetricOperator a =
      opineq::operator_from_json(load_json_file(o.matrices.at(0)));
  opineq::SymmetricOperator b =
      opineq::operator_from_json(load_json_file(o.matrices.at(1)));
  opineq::SandwichSpec sw(o.m_prime, o.m, o.M, o.M_prime,
                          o.condition == "ii"
                              ? opineq::SandwichCondition::ii
                              : opineq::SandwichCondition::i);
  if (!opineq::check_condition(a, b, sw)) {
    std::cerr << "error: the spectral sandwich condition (" << o.condition
              << ") does not hold for the given matrices and thresholds\n";
    return 1;
  }
  opineq::InequalityReport rep =
      opineq::operator_young_check(a, b, o.v, sw, tol);
  emit(f, opineq::to_json(rep));
  return rep.all_hold ? 0 : 1;
}

int cmd_table_young(Format f, double tol, double a, double b, int steps) {
  Table t;
  t.header = {"v",
              "nabla",
              "sharp",
              "heinz",
              "ratio",
              "classical_lower",
              "classical_upper",
              "refined_lower",
              "refined_upper",
              "reverse_lower",
              "reverse_upper",
              "dragomir_lower",
              "dragomir_upper",
              "wzl_lower",
              "wzl_upper",
              "all_hold"};
  bool all = true;
  for (int i = 0; i < steps; ++i) {
    double v = i / (steps - 1.0);
    opineq::YoungReport yr =
        opineq::young_report(opineq::MeanContext(a, b, v), tol);
    std::vector<Json> row{v, yr.nabla, yr.sharp, yr.heinz, yr.ratio};
    for (const auto& e : yr.bounds) row.push_back(e.value);
    row.push_back(yr.all_hold);
    all = all && yr.all_hold;
    t.rows.push_back(std::move(row));
  }
  emit_table(f, t);
  return all ? 0 : 1;
}

int cmd_table_heinz(Format f, double tol, double a, double b, int steps) {
  Table t;
  t.header = {"v",           "geometric",    "heinz",
              "refined_heinz", "refined_arith", "arith",
              "dragomir_lhs", "dragomir_rhs", "holds"};
  auto rel = [](double lo, double hi) {
    return (hi - lo) / (1.0 + std::max(std::abs(lo), std::abs(hi)));
  };
  bool all = true;
  for (int i = 0; i < steps; ++i) {
    double v = i / (steps - 1.0);
    opineq::HeinzChain hc =
        opineq::heinz_chain(opineq::MeanContext(a, b, v));
    double worst = std::min({rel(hc.geometric, hc.refined_heinz),
                             rel(hc.refined_heinz, hc.refined_arith),
                             rel(hc.refined_arith, hc.arith),
                             rel(hc.dragomir_lhs, hc.dragomir_rhs)});
    bool ok = worst >= -tol;
    all = all && ok;
    t.rows.push_back({v, hc.geometric, hc.heinz, hc.refined_heinz,
                      hc.refined_arith, hc.arith, hc.dragomir_lhs,
                      hc.dragomir_rhs, ok});
  }
  emit_table(f, t);
  return all ? 0 : 1;
}

int cmd_scan_sin(Format f, int steps) {
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i) grid[i] = i / (steps - 1.0);
  std::vector<opineq::SinScanRow> rows = opineq::sin_example_scan(grid);
  Table t;
  t.header = {"p",          "lhs",
              "bound_classical", "bound_refined",
              "holds_classical", "holds_refined"};
  bool refined_ok = true;
  for (const auto& r : rows) {
    refined_ok = refined_ok && r.holds_refined;
    t.rows.push_back({r.p, r.lhs, r.bound_classical, r.bound_refined,
                      r.holds_classical, r.holds_refined});
  }
  emit_table(f, t);
  // The classical bound is expected to fail on part of the grid; only the
  // refined bound is asserted.
  return refined_ok ? 0 : 1;
}

int cmd_suite(Format f, const std::string& name,
              const opineq::harness::RandomSpec& spec, bool serial) {
  opineq::harness::SuiteReport rep = opineq::harness::run_suite(
      name, spec,
      serial ? opineq::harness::ExecutionPolicy::serial
             : opineq::harness::ExecutionPolicy::parallel);
  emit(f, opineq::to_json(rep));
  return rep.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Refined Jensen and Young-type operator inequalities: evaluate, "
      "verify, and stress-test"};
  app.require_subcommand(1);

  std::string format = "pretty";
  double tolerance = opineq::kVerdictRelTol;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format: pretty|json|csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();
  };
  auto add_tolerance = [&](CLI::App* sub) {
    sub->add_option("--tolerance", tolerance,
                    "relative verdict tolerance (one-sided)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  CLI::App* reproduce = app.add_subcommand(
      "reproduce",
      "recompute the published comparison values and the sin example scan");
  add_format(reproduce);

  CLI::App* verify =
      app.add_subcommand("verify", "check one inequality instance");
  verify->require_subcommand(1);

  JensenOpts jo;
  CLI::App* vj = verify->add_subcommand(
      "jensen", "operator Jensen inequality on user matrices");
  add_format(vj);
  add_tolerance(vj);
  auto* fn_opt =
      vj->add_option("--function", jo.function, "expression in x");
  auto* iv_opt = vj->add_option("--interval", jo.interval,
                                "domain endpoints (decimal or 2pi)")
                     ->expected(2);
  auto* bi_opt = vj->add_option("--builtin", jo.builtin,
                                "built-in model: sin|exp|neglog|pow4")
                     ->check(CLI::IsMember(opineq::builtin_model_names()));
  fn_opt->excludes(bi_opt)->needs(iv_opt);
  iv_opt->needs(fn_opt);
  vj->add_option("--matrix", jo.matrices, "JSON matrix file (repeatable)")
      ->required();
  vj->add_option("--vector", jo.vector_file, "JSON unit-vector file")
      ->required();
  vj->add_option("--weights", jo.weights_file,
                 "JSON weights file (for several matrices)");
  auto* al_opt =
      vj->add_option("--alpha", jo.alpha, "convexifier override");
  vj->add_option("--lipschitz", jo.lipschitz,
                 "derivative Lipschitz bound; sets alpha = -L")
      ->excludes(al_opt);

  double ya = 0.0, yb = 0.0, yv = 0.0;
  CLI::App* vy = verify->add_subcommand(
      "young", "scalar Young-type sandwich at one (a, b, v)");
  add_format(vy);
  add_tolerance(vy);
  vy->add_option("--a", ya)->required()->check(CLI::PositiveNumber);
  vy->add_option("--b", yb)->required()->check(CLI::PositiveNumber);
  vy->add_option("--v", yv)->required()->check(CLI::Range(0.0, 1.0));

  CLI::App* vh = verify->add_subcommand(
      "heinz", "Heinz mean chain at one (a, b, v)");
  add_format(vh);
  add_tolerance(vh);
  vh->add_option("--a", ya)->required()->check(CLI::PositiveNumber);
  vh->add_option("--b", yb)->required()->check(CLI::PositiveNumber);
  vh->add_option("--v", yv)->required()->check(CLI::Range(0.0, 1.0));

  OpYoungOpts oo;
  CLI::App* vo = verify->add_subcommand(
      "operator-young", "operator Young sandwich under a spectral condition");
  add_format(vo);
  add_tolerance(vo);
  vo->add_option("--matrix", oo.matrices, "JSON matrix files: A then B")
      ->expected(2)
      ->required();
  vo->add_option("--v", oo.v)->required()->check(CLI::Range(0.0, 1.0));
  vo->add_option("--m-prime", oo.m_prime)->required()
      ->check(CLI::PositiveNumber);
  vo->add_option("--m", oo.m)->required()->check(CLI::PositiveNumber);
  vo->add_option("--M", oo.M)->required()->check(CLI::PositiveNumber);
  vo->add_option("--M-prime", oo.M_prime)->required()
      ->check(CLI::PositiveNumber);
  vo->add_option("--condition", oo.condition, "which operator sits lower")
      ->check(CLI::IsMember({"i", "ii"}))
      ->capture_default_str();

  CLI::App* table =
      app.add_subcommand("table", "bound tables over a weight grid");
  table->require_subcommand(1);
  int steps = 101;
  CLI::App* ty = table->add_subcommand("young", "young bound table");
  add_format(ty);
  add_tolerance(ty);
  ty->add_option("--a", ya)->required()->check(CLI::PositiveNumber);
  ty->add_option("--b", yb)->required()->check(CLI::PositiveNumber);
  ty->add_option("--v-steps", steps)->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  CLI::App* th = table->add_subcommand("heinz", "heinz chain table");
  add_format(th);
  add_tolerance(th);
  th->add_option("--a", ya)->required()->check(CLI::PositiveNumber);
  th->add_option("--b", yb)->required()->check(CLI::PositiveNumber);
  th->add_option("--v-steps", steps)->check(CLI::Range(2, 1000000))
      ->capture_default_str();

  std::string suite_name;
  std::uint64_t seed = 42;
  int trials = 200;
  int dim_min = 1, dim_max = 8;
  std::vector<std::string> suite_interval{"0", "1"};
  bool serial = false;
  CLI::App* suite = app.add_subcommand("suite", "run a property-test suite");
  add_format(suite);
  suite->add_option("name", suite_name, "suite to run")
      ->required()
      ->check(CLI::IsMember(opineq::harness::suite_names()));
  suite->add_option("--seed", seed, "base RNG seed")
      ->envname("OPINEQ_SEED")
      ->capture_default_str();
  suite->add_option("--trials", trials)->check(CLI::Range(1, 10000000))
      ->capture_default_str();
  suite->add_option("--dim-min", dim_min)->check(CLI::Range(1, 64))
      ->capture_default_str();
  suite->add_option("--dim-max", dim_max)->check(CLI::Range(1, 64))
      ->capture_default_str();
  suite->add_option("--interval", suite_interval,
                    "target spectrum range (decimal or 2pi)")
      ->expected(2);
  suite->add_flag("--serial", serial, "run trials on one thread");

  CLI::App* scan = app.add_subcommand("scan", "pointwise scans");
  scan->require_subcommand(1);
  CLI::App* ss = scan->add_subcommand(
      "sin-example", "the sin counterexample over a p grid");
  add_format(ss);
  ss->add_option("--steps", steps)->check(CLI::Range(2, 1000000))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Format f = parse_format(format);
    if (reproduce->parsed()) return cmd_reproduce(f);
    if (vj->parsed()) return cmd_verify_jensen(f, tolerance, jo);
    if (vy->parsed()) return cmd_verify_young(f, tolerance, ya, yb, yv);
    if (vh->parsed()) return cmd_verify_heinz(f, tolerance, ya, yb, yv);
    if (vo->parsed()) return cmd_verify_operator_young(f, tolerance, oo);
    if (ty->parsed()) return cmd_table_young(f, tolerance, ya, yb, steps);
    if (th->parsed()) return cmd_table_heinz(f, tolerance, ya, yb, steps);
    if (ss->parsed()) return cmd_scan_sin(f, steps);
    if (suite->parsed()) {
      if (dim_min > dim_max) throw UsageError("--dim-min exceeds --dim-max");
      opineq::harness::RandomSpec spec{seed, trials, dim_min, dim_max,
                                       parse_interval(suite_interval)};
      return cmd_suite(f, suite_name, spec, serial);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
