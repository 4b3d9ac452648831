#pragma once

// Satisfiable-fraction sweeps over random seating instances. For every enemy
// probability e the harness generates instances_per_point instances and runs
// both a complete solver and WalkSAT on each identical instance.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cnfsat/cnf.hpp"
#include "cnfsat/resolution.hpp"
#include "cnfsat/walksat.hpp"

namespace cnfsat {

class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class CompleteSolver { resolution, oracle };

[[nodiscard]] std::string to_string(CompleteSolver s);

struct ExperimentConfig {
  std::uint32_t guests = 16;
  std::uint32_t tables = 2;
  double f = 0.0;
  std::vector<double> e_values{0.02, 0.04, 0.06, 0.08, 0.10, 0.12, 0.14, 0.16, 0.18, 0.20};
  std::size_t instances_per_point = 100;
  WalkSatParams walksat{};
  ResolutionLimits resolution_limits{};
  CompleteSolver complete_solver = CompleteSolver::resolution;
  std::uint64_t master_seed = 0;
  /// When false the runtime columns are reported as zero, making the whole
  /// CSV a pure function of the config.
  bool record_timings = true;
  /// Worker threads; 0 means one per hardware thread.
  unsigned threads = 1;
};

/// Throws ConfigError on an inconsistent configuration.
void validate(const ExperimentConfig& cfg);

/// Reads flat `key = value` text; `#` starts a comment. Keys: guests, tables,
/// f, e_values (comma separated), instances_per_point, p, max_flips,
/// max_clauses, max_rounds, time_budget (seconds), complete_solver
/// (resolution|oracle), master_seed, record_timings (true|false), threads.
/// Unset keys keep their ExperimentConfig defaults.
[[nodiscard]] ExperimentConfig parse_config(std::string_view text);
[[nodiscard]] std::string format_config(const ExperimentConfig& cfg);

/// seed = mix64(mix64(mix64(master) ^ point_index) ^ instance_index).
[[nodiscard]] std::uint64_t instance_seed(std::uint64_t master_seed, std::size_t point_index,
                                          std::size_t instance_index);
/// WalkSAT seed for an instance: mix64(instance_seed ^ 0x57414c4b534154).
[[nodiscard]] std::uint64_t walksat_seed(std::uint64_t instance_seed);

enum class Judgement { satisfiable, unsatisfiable, unknown };

struct InstanceOutcome {
  Judgement complete = Judgement::unknown;
  /// WalkSAT returned a model and the model checked out.
  bool walksat_found_model = false;
  /// The complete solver threw (e.g. oracle limits); counted as unknown.
  bool complete_failed = false;
  double complete_ms = 0.0;
  double walksat_ms = 0.0;
};

/// Runs both solvers on instance `instance_index` of point `point_index`.
[[nodiscard]] InstanceOutcome run_instance(const ExperimentConfig& cfg, std::size_t point_index,
                                           std::size_t instance_index);

struct ExperimentPoint {
  double e = 0.0;
  double p_complete = 0.0;
  double p_walksat = 0.0;
  double unknown_complete = 0.0;
  double mean_runtime_complete_ms = 0.0;
  double mean_runtime_walksat_ms = 0.0;
  std::size_t instances = 0;
  std::size_t failed_instances = 0;
};

/// One point per e value, in config order. Output is independent of the
/// thread count.
[[nodiscard]] std::vector<ExperimentPoint> run_experiment(const ExperimentConfig& cfg);

}  // namespace cnfsat
