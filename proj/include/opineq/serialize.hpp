#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "opineq/harness.hpp"
#include "opineq/jensen.hpp"
#include "opineq/matops.hpp"
#include "opineq/opyoung.hpp"
#include "opineq/young.hpp"

namespace opineq {

// Field order in emitted objects is fixed (declaration order), so dumps are
// byte-stable and canonical reports can be compared as strings.
using Json = nlohmann::ordered_json;

Json to_json(const SymmetricOperator& a);  // array of rows
Json to_json(const StateVector& x);        // flat array
Json to_json(const JensenReport& r);
Json to_json(const GapBounds& g);
Json to_json(const SinScanRow& row);
Json to_json(std::span<const SinScanRow> rows);
Json to_json(const BoundEntry& e);
Json to_json(const YoungReport& r);
Json to_json(const HeinzChain& h);
Json to_json(const KantorovichExp& k);
Json to_json(const RemarkComparison& r);
Json to_json(std::span<const RemarkComparison> rs);
Json to_json(const LoewnerCheck& c);
Json to_json(const InequalityReport& r);
Json to_json(const EndpointScanReport& r);
Json to_json(const harness::SuiteReport& r);

// to_json(SuiteReport) without wall_time_ms: what the reproducibility
// contract promises to be identical across runs and execution policies.
Json canonical_json(const harness::SuiteReport& r);

// Inverses for CLI file input.  Throw std::invalid_argument on shape errors
// (non-square, ragged, empty); from_rows adds its symmetry check.
SymmetricOperator operator_from_json(const Json& j);
StateVector vector_from_json(const Json& j);

// Locale-independent number rendering: sig17 round-trips doubles exactly,
// sig6 matches the published six-digit precision.
std::string sig17(double x);
std::string sig6(double x);

}  // namespace opineq
