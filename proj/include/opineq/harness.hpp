#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "opineq/jensen.hpp"
#include "opineq/matops.hpp"
#include "opineq/rng.hpp"
#include "opineq/scalar_fn.hpp"

namespace opineq::harness {

// Stream indices for derive_state: every independent random quantity in a
// trial draws from its own stream, so adding draws to one quantity never
// shifts another and serial/parallel execution see identical instances.
inline constexpr std::uint64_t kStreamDimension = 0;
inline constexpr std::uint64_t kStreamMatrix = 1;
inline constexpr std::uint64_t kStreamVector = 2;
inline constexpr std::uint64_t kStreamWeights = 3;
inline constexpr std::uint64_t kStreamScalars = 4;
// kStreamAux + k for suites needing several matrices/vectors per trial.
inline constexpr std::uint64_t kStreamAux = 16;

struct RandomSpec {
  std::uint64_t seed = 42;
  int trials = 200;
  int dim_min = 1;
  int dim_max = 8;
  Interval interval{0.0, 1.0};

  // Throws std::invalid_argument unless trials >= 1 and 1 <= dim_min <=
  // dim_max.
  void validate() const;
};

// The dimension shared by the default matrix and vector draws of one trial.
int random_dimension(const RandomSpec& spec, std::uint64_t trial);

// Q Lambda Q^T with eigenvalues uniform in `interval` and Q obtained by
// modified Gram-Schmidt on standard-normal columns (a column is redrawn when
// its residual norm falls below 1e-8; more than 100 redraws is an error).
SymmetricOperator random_symmetric(const RandomSpec& spec, std::uint64_t trial,
                                   std::uint64_t stream, int n,
                                   const Interval& interval);
// Spec-level form: dimension from the shared dimension stream, spectrum from
// spec.interval, matrix stream kStreamMatrix.
SymmetricOperator random_symmetric(const RandomSpec& spec, std::uint64_t trial);

// Normalised standard-normal vector (redrawn on near-zero norm).
StateVector random_unit_vector(const RandomSpec& spec, std::uint64_t trial,
                               std::uint64_t stream, int n);
StateVector random_unit_vector(const RandomSpec& spec, std::uint64_t trial);

// Normalised absolute normals, floored at 1e-6 and renormalised.
WeightVector random_weights(const RandomSpec& spec, std::uint64_t trial, int n);

enum class ExecutionPolicy { serial, parallel };

// Aggregate over one suite run.  worst_margin is the most negative relative
// slack observed (positive when every check held with room); counterexamples
// hold the serialized inputs of the first failures in trial order, capped at
// 10.  A trial that throws is recorded as a failure with margin -1.
struct SuiteReport {
  std::string suite;
  int trials = 0;
  int failures = 0;
  double worst_margin = 0.0;
  std::vector<std::string> counterexamples;
  double wall_time_ms = 0.0;
};

// Registered suite names, in the order used everywhere (CLI help, docs):
//   jensen-operator, jensen-equivalence, pecaric-mitroi, young-sandwich,
//   young-nesting, young-no-ordering, heinz-chain, kantorovich-exp,
//   operator-young, endpoint-scan, expr-derivative.
const std::vector<std::string>& suite_names();

// Runs the named suite.  Grid-based suites (young-sandwich, kantorovich-exp,
// young-no-ordering) derive their trial count from the grid and ignore
// config.trials.  Identical (name, config) yield identical reports apart
// from wall_time_ms, for either execution policy.  Throws
// std::invalid_argument for unknown names or invalid configs.
SuiteReport run_suite(std::string_view name, const RandomSpec& config,
                      ExecutionPolicy policy = ExecutionPolicy::parallel);

}  // namespace opineq::harness
