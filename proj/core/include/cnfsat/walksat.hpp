#pragma once

// Single-try WalkSAT: random initial model, then up to max_flips rounds of
// "pick a falsified clause, flip one of its variables".
//
// Random stream consumption, all from one Rng seeded with params.seed:
//   1. initial model: one coin() per variable, variable 1 first;
//   2. per flip: uniform_index(#falsified clauses) over falsified clauses in
//      formula order, then one uniform_real() u; u < p takes the random-walk
//      branch, which draws uniform_index(clause width); otherwise the greedy
//      branch draws uniform_index(#tied best candidates), which consumes
//      nothing when the best candidate is unique.

#include <cstddef>
#include <cstdint>

#include "cnfsat/cnf.hpp"
#include "cnfsat/rng.hpp"

namespace cnfsat {

class InvalidParams : public Error {
 public:
  using Error::Error;
};

struct WalkSatParams {
  /// Probability of a random-walk move, in [0, 1].
  double p = 0.5;
  std::size_t max_flips = 100;
  std::uint64_t seed = 0;
};

struct WalkSatStats {
  std::size_t flips_used = 0;
  std::size_t restarts = 0;
  std::size_t final_unsat_count = 0;
  friend bool operator==(const WalkSatStats&, const WalkSatStats&) = default;
};

struct WalkSatResult {
  Verdict verdict;
  WalkSatStats stats;
  friend bool operator==(const WalkSatResult&, const WalkSatResult&) = default;
};

/// Satisfiable(model) when some checked model satisfies f, otherwise
/// Unknown(flip_budget_exhausted). The model is checked before each of the
/// max_flips flips, never after the last one. A formula containing the empty
/// clause yields Unknown without flipping. Throws InvalidParams for p outside
/// [0, 1] or max_flips == 0.
[[nodiscard]] WalkSatResult walksat(const Formula& f, const WalkSatParams& params);

/// One move on a clause that is false under `model`: with probability p a
/// uniformly random variable of the clause, otherwise the variable whose flip
/// leaves the most clauses of f satisfied (uniform among ties). Evaluates
/// candidates by full recount.
[[nodiscard]] Variable choose_flip_var(const Clause& clause, const Model& model, const Formula& f,
                                       double p, Rng& rng);

/// Certificate check: every clause of f is true under m.
[[nodiscard]] inline bool verify_model(const Formula& f, const Model& m) {
  return eval_formula(f, m);
}

namespace detail {
/// walksat() driven by choose_flip_var and full recounts; same random stream
/// consumption, so results must match walksat() exactly.
[[nodiscard]] WalkSatResult walksat_reference(const Formula& f, const WalkSatParams& params);
}  // namespace detail

}  // namespace cnfsat
