#pragma once

// Test-only random inputs and a second, deliberately slow satisfiability
// check that shares no code with the library's truth-table oracle.

#include <cstdint>
#include <vector>

#include "cnfsat/cnf.hpp"
#include "cnfsat/rng.hpp"
#include "cnfsat/seating.hpp"

namespace cnfsat::testing {

struct FormulaShape {
  std::size_t max_vars = 10;
  std::size_t max_clauses = 40;
  std::size_t max_width = 3;
  std::size_t min_vars = 1;
};

/// Random formula; clause widths uniform in [1, max_width] (occasionally 0
/// when allow_empty is set), literals uniform over vars and polarity.
inline Formula random_formula(Rng& rng, const FormulaShape& shape, bool allow_empty = false) {
  const std::size_t n = shape.min_vars + rng.uniform_index(shape.max_vars - shape.min_vars + 1);
  const std::size_t m = rng.uniform_index(shape.max_clauses + 1);
  std::vector<Clause> clauses;
  clauses.reserve(m);
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t width = 1 + rng.uniform_index(shape.max_width);
    if (allow_empty && rng.uniform_index(50) == 0) width = 0;
    std::vector<Literal> lits;
    for (std::size_t k = 0; k < width; ++k) {
      const Variable v{static_cast<std::uint32_t>(1 + rng.uniform_index(n))};
      lits.push_back(rng.coin() ? Literal::positive(v) : Literal::negative(v));
    }
    clauses.emplace_back(std::move(lits));
  }
  return Formula(n, std::move(clauses));
}

inline SeatingInstance random_instance(Rng& rng, std::uint32_t max_guests,
                                       std::uint32_t max_tables) {
  const auto m = static_cast<std::uint32_t>(1 + rng.uniform_index(max_guests));
  const auto n = static_cast<std::uint32_t>(1 + rng.uniform_index(max_tables));
  SeatingInstance inst(m, n);
  for (std::uint32_t i = 1; i <= m; ++i) {
    for (std::uint32_t j = i + 1; j <= m; ++j) {
      inst.set_relation(i, j, static_cast<Relation>(rng.uniform_index(3)));
    }
  }
  return inst;
}

/// Enumerates every Model object in lexicographic order and evaluates with
/// eval_formula. Returns the number of models and the first one found.
struct NaiveCount {
  std::uint64_t models = 0;
  std::vector<bool> first;
};

inline NaiveCount naive_enumerate(const Formula& f) {
  const std::size_t n = f.num_vars();
  NaiveCount out;
  std::vector<bool> values(n, false);
  for (;;) {
    if (eval_formula(f, Model(values))) {
      if (out.models == 0) out.first = values;
      ++out.models;
    }
    // Increment with variable n as the least significant position.
    std::size_t i = n;
    while (i > 0 && values[i - 1]) values[--i] = false;
    if (i == 0) break;
    values[i - 1] = true;
  }
  return out;
}

}  // namespace cnfsat::testing
