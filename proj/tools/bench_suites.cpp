// Times every suite under serial and parallel execution and checks that the
// canonical reports (everything but wall time) are byte-identical.
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "opineq/harness.hpp"
#include "opineq/serialize.hpp"

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel suite timing with report-identity check"};
  std::uint64_t seed = 42;
  int trials = 200;
  std::vector<std::string> only;
  app.add_option("--seed", seed)->capture_default_str();
  app.add_option("--trials", trials)
      ->check(CLI::Range(1, 10000000))
      ->capture_default_str();
  app.add_option("--suite", only, "restrict to named suites (repeatable)")
      ->check(CLI::IsMember(opineq::harness::suite_names()));
  CLI11_PARSE(app, argc, argv);

  using opineq::harness::ExecutionPolicy;
  using opineq::harness::SuiteReport;
  opineq::harness::RandomSpec spec;
  spec.seed = seed;
  spec.trials = trials;

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (built without OpenMP)\n";
#endif
  std::cout << std::left << std::setw(20) << "suite" << std::right
            << std::setw(8) << "trials" << std::setw(12) << "serial ms"
            << std::setw(13) << "parallel ms" << std::setw(9) << "speedup"
            << std::setw(7) << "match" << "\n";

  bool all_match = true;
  int failures = 0;
  const std::vector<std::string>& names =
      only.empty() ? opineq::harness::suite_names() : only;
  for (const auto& name : names) {
    SuiteReport s =
        opineq::harness::run_suite(name, spec, ExecutionPolicy::serial);
    SuiteReport p =
        opineq::harness::run_suite(name, spec, ExecutionPolicy::parallel);
    bool match =
        opineq::canonical_json(s).dump() == opineq::canonical_json(p).dump();
    all_match = all_match && match;
    failures += s.failures + p.failures;
    double speedup =
        p.wall_time_ms > 0.0 ? s.wall_time_ms / p.wall_time_ms : 0.0;
    std::cout << std::left << std::setw(20) << name << std::right
              << std::setw(8) << s.trials << std::setw(12) << std::fixed
              << std::setprecision(1) << s.wall_time_ms << std::setw(13)
              << p.wall_time_ms << std::setw(8) << std::setprecision(2)
              << speedup << "x" << std::setw(7) << (match ? "yes" : "NO")
              << "\n";
  }
  if (!all_match) {
    std::cerr << "serial and parallel reports differ\n";
    return 1;
  }
  if (failures > 0) {
    std::cerr << failures << " trial failures\n";
    return 1;
  }
  return 0;
}
