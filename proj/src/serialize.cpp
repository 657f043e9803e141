#include "opineq/serialize.hpp"

#include <charconv>
#include <stdexcept>

namespace opineq {

namespace {

std::string format_general(double x, int precision) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x,
                           std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string sig17(double x) { return format_general(x, 17); }
std::string sig6(double x) { return format_general(x, 6); }

Json to_json(const SymmetricOperator& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.dim(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const StateVector& x) { return Json(x.c); }

Json to_json(const JensenReport& r) {
  return Json{{"lhs", r.lhs},
              {"rhs_classical", r.rhs_classical},
              {"variance", r.variance},
              {"alpha", r.alpha},
              {"rhs_refined", r.rhs_refined},
              {"margin_refined", r.margin_refined},
              {"margin_classical", r.margin_classical},
              {"holds_refined", r.holds_refined},
              {"holds_classical", r.holds_classical}};
}

Json to_json(const GapBounds& g) {
  return Json{{"lower", g.lower},
              {"upper", g.upper},
              {"gap", g.gap},
              {"eq_gap", g.eq_gap}};
}

Json to_json(const SinScanRow& row) {
  return Json{{"p", row.p},
              {"lhs", row.lhs},
              {"bound_classical", row.bound_classical},
              {"bound_refined", row.bound_refined},
              {"holds_classical", row.holds_classical},
              {"holds_refined", row.holds_refined}};
}

Json to_json(std::span<const SinScanRow> rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(to_json(row));
  return out;
}

Json to_json(const BoundEntry& e) {
  return Json{{"family", e.family},   {"side", e.side},
              {"value", e.value},     {"margin", e.margin},
              {"rel_margin", e.rel_margin}, {"holds", e.holds}};
}

Json to_json(const YoungReport& r) {
  Json bounds = Json::array();
  for (const auto& e : r.bounds) bounds.push_back(to_json(e));
  return Json{{"a", r.a},
              {"b", r.b},
              {"v", r.v},
              {"nabla", r.nabla},
              {"sharp", r.sharp},
              {"heinz", r.heinz},
              {"ratio", r.ratio},
              {"bounds", std::move(bounds)},
              {"worst_rel_margin", r.worst_rel_margin},
              {"all_hold", r.all_hold}};
}

Json to_json(const HeinzChain& h) {
  return Json{{"geometric", h.geometric},
              {"heinz", h.heinz},
              {"refined_heinz", h.refined_heinz},
              {"refined_arith", h.refined_arith},
              {"arith", h.arith},
              {"dragomir_lhs", h.dragomir_lhs},
              {"dragomir_rhs", h.dragomir_rhs}};
}

Json to_json(const KantorovichExp& k) {
  return Json{{"kantorovich_value", k.kantorovich_value},
              {"exp_value", k.exp_value},
              {"difference", k.difference}};
}

Json to_json(const RemarkComparison& r) {
  return Json{{"name", r.name},
              {"computed", r.computed},
              {"reference", r.reference},
              {"delta", r.delta}};
}

Json to_json(std::span<const RemarkComparison> rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back(to_json(r));
  return out;
}

Json to_json(const LoewnerCheck& c) {
  return Json{{"name", c.name},
              {"coefficient", c.coefficient},
              {"min_eigenvalue", c.min_eigenvalue},
              {"rel_margin", c.rel_margin},
              {"holds", c.holds}};
}

Json to_json(const InequalityReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"v", r.v},
              {"h", r.h},
              {"h_prime", r.h_prime},
              {"c_low", r.c_low},
              {"c_high", r.c_high},
              {"c_rev_low", r.c_rev_low},
              {"c_rev_high", r.c_rev_high},
              {"checks", std::move(checks)},
              {"worst_rel_margin", r.worst_rel_margin},
              {"all_hold", r.all_hold}};
}

Json to_json(const EndpointScanReport& r) {
  return Json{{"h", r.h},
              {"h_prime", r.h_prime},
              {"v", r.v},
              {"grid_size", r.grid_size},
              {"lower_min_x", r.lower_min_x},
              {"lower_min_value", r.lower_min_value},
              {"upper_max_x", r.upper_max_x},
              {"upper_max_value", r.upper_max_value},
              {"lower_min_at_left", r.lower_min_at_left},
              {"upper_max_at_right", r.upper_max_at_right},
              {"lower_monotone", r.lower_monotone},
              {"upper_monotone", r.upper_monotone},
              {"worst_rel_margin", r.worst_rel_margin}};
}

Json to_json(const harness::SuiteReport& r) {
  Json j = canonical_json(r);
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

Json canonical_json(const harness::SuiteReport& r) {
  return Json{{"suite", r.suite},
              {"trials", r.trials},
              {"failures", r.failures},
              {"worst_margin", r.worst_margin},
              {"counterexamples", r.counterexamples}};
}

SymmetricOperator operator_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix JSON must be a nonempty array of rows");
  std::vector<std::vector<double>> rows;
  rows.reserve(j.size());
  for (const auto& row : j) {
    if (!row.is_array())
      throw std::invalid_argument("matrix JSON rows must be arrays");
    rows.push_back(row.get<std::vector<double>>());
  }
  return SymmetricOperator::from_rows(rows);
}

StateVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(
        "vector JSON must be a nonempty array of numbers");
  return StateVector{j.get<std::vector<double>>()};
}

}  // namespace opineq
