#pragma once

// Saturation by propositional resolution: keep adding pairwise resolvents
// until the empty clause appears (unsatisfiable) or a full round adds
// nothing new (satisfiable).

#include <chrono>
#include <cstddef>
#include <vector>

#include "cnfsat/cnf.hpp"

namespace cnfsat {

struct ResolutionLimits {
  std::size_t max_clauses = 200'000;
  std::size_t max_rounds = 1'000;
  std::chrono::duration<double> time_budget{60.0};
};

struct ResolutionOptions {
  /// Drop resolvents that contain some variable in both polarities.
  bool discard_tautologies = true;
  /// Return the final clause set in ResolutionResult::clauses.
  bool record_clauses = false;
};

struct ResolutionStats {
  std::size_t rounds = 0;
  std::size_t clauses_final = 0;
  std::size_t resolvents_generated = 0;
  std::chrono::duration<double> elapsed{0.0};
  /// The empty clause was derived (or given as input).
  bool empty_clause = false;
};

struct ResolutionResult {
  Verdict verdict;
  ResolutionStats stats;
  /// Final clause set in insertion order; only filled when record_clauses is set.
  std::vector<Clause> clauses;
};

/// Every resolvent of ci and cj, one per variable occurring with opposite
/// signs in the two clauses, canonicalized and deduplicated. Sorted.
[[nodiscard]] std::vector<Clause> pl_resolve(const Clause& ci, const Clause& cj,
                                             bool discard_tautologies = true);

/// Returns Unsatisfiable as soon as a resolvent is empty, Satisfiable (no
/// model) once a round produces only clauses already present, and
/// Unknown(resource_limit_exceeded) when a limit trips. Each round resolves
/// every unordered pair of the current set; pairs already resolved in an
/// earlier round are not revisited since their resolvents are already known.
[[nodiscard]] ResolutionResult pl_resolution(const Formula& f, const ResolutionLimits& limits = {},
                                             const ResolutionOptions& options = {});

}  // namespace cnfsat
