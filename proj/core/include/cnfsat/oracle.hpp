#pragma once

// Exhaustive truth-table search. Deliberately naive: it is the independent
// ground truth the other solvers are checked against.

#include <cstddef>
#include <cstdint>

#include "cnfsat/cnf.hpp"

namespace cnfsat {

class SeatingInstance;

class TooManyVariables : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultOracleVarLimit = 24;

/// Satisfiable with the lexicographically first model (variable 1 most
/// significant, false before true) or Unsatisfiable. Throws TooManyVariables
/// when num_vars > var_limit.
[[nodiscard]] Verdict brute_force_solve(const Formula& f,
                                        std::size_t var_limit = kDefaultOracleVarLimit);

/// Number of satisfying total assignments.
[[nodiscard]] std::uint64_t count_models(const Formula& f,
                                         std::size_t var_limit = kDefaultOracleVarLimit);

/// Decides a seating instance without going through CNF: enumerates every
/// guest-to-table map and checks the Friends/Enemies constraints directly.
/// The witness (first map in lexicographic order, guest 1 most significant)
/// is returned as a Model under the encoder's variable numbering. Throws
/// TooManyVariables when N^M exceeds 2^log2_limit.
[[nodiscard]] Verdict brute_force_seating(const SeatingInstance& inst,
                                          std::size_t log2_limit = kDefaultOracleVarLimit);

}  // namespace cnfsat
