#include "cnfsat/oracle.hpp"

#include <algorithm>
#include <vector>

#include <fmt/format.h>

#include "cnfsat/seating.hpp"

namespace cnfsat {

namespace {

// Assignments are enumerated as a counter k in [0, 2^n); variable v is bit
// (n - v) of k, so variable 1 is the most significant and counting order is
// lexicographic order with false < true.
struct MaskedClause {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

std::size_t effective_limit(std::size_t var_limit) { return std::min<std::size_t>(var_limit, 62); }

std::vector<MaskedClause> mask_clauses(const Formula& f, std::size_t var_limit) {
  const std::size_t n = f.num_vars();
  if (n > effective_limit(var_limit)) {
    throw TooManyVariables(
        fmt::format("{} variables exceed the truth-table limit of {}", n, effective_limit(var_limit)));
  }
  std::vector<MaskedClause> masks;
  masks.reserve(f.size());
  for (const auto& c : f.clauses()) {
    MaskedClause m;
    for (const auto l : c) {
      const std::uint64_t bit = std::uint64_t{1} << (n - l.var().id);
      (l.is_positive() ? m.pos : m.neg) |= bit;
    }
    masks.push_back(m);
  }
  return masks;
}

bool satisfies_all(const std::vector<MaskedClause>& masks, std::uint64_t k) {
  for (const auto& m : masks) {
    if (((k & m.pos) | (~k & m.neg)) == 0) return false;
  }
  return true;
}

Model model_from_counter(std::size_t n, std::uint64_t k) {
  Model m(n);
  for (std::size_t v = 1; v <= n; ++v) {
    m.set(Variable{static_cast<std::uint32_t>(v)}, ((k >> (n - v)) & 1U) != 0);
  }
  return m;
}

}  // namespace

Verdict brute_force_solve(const Formula& f, std::size_t var_limit) {
  const auto masks = mask_clauses(f, var_limit);
  const std::size_t n = f.num_vars();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < total; ++k) {
    if (satisfies_all(masks, k)) return Satisfiable{model_from_counter(n, k)};
  }
  return Unsatisfiable{};
}

std::uint64_t count_models(const Formula& f, std::size_t var_limit) {
  const auto masks = mask_clauses(f, var_limit);
  const std::uint64_t total = std::uint64_t{1} << f.num_vars();
  std::uint64_t count = 0;
  for (std::uint64_t k = 0; k < total; ++k) count += satisfies_all(masks, k) ? 1 : 0;
  return count;
}

Verdict brute_force_seating(const SeatingInstance& inst, std::size_t log2_limit) {
  const std::uint32_t guests = inst.num_guests();
  const std::uint32_t tables = inst.num_tables();
  const std::uint64_t cap = std::uint64_t{1} << effective_limit(log2_limit);
  std::uint64_t space = 1;
  for (std::uint32_t i = 0; i < guests; ++i) {
    if (space > cap / tables) {
      throw TooManyVariables(fmt::format("{}^{} seatings exceed the limit of 2^{}", tables,
                                         guests, effective_limit(log2_limit)));
    }
    space *= tables;
  }

  const auto friends = inst.pairs(Relation::friends);
  const auto enemies = inst.pairs(Relation::enemies);
  // Odometer over guest -> table (0-based), guest 1 most significant.
  std::vector<std::uint32_t> seat(guests, 0);
  for (std::uint64_t k = 0; k < space; ++k) {
    const bool ok =
        std::all_of(friends.begin(), friends.end(),
                    [&](GuestPair p) { return seat[p.first - 1] == seat[p.second - 1]; }) &&
        std::all_of(enemies.begin(), enemies.end(),
                    [&](GuestPair p) { return seat[p.first - 1] != seat[p.second - 1]; });
    if (ok) {
      std::vector<std::uint32_t> table_of(guests);
      std::transform(seat.begin(), seat.end(), table_of.begin(),
                     [](std::uint32_t t) { return t + 1; });
      return Satisfiable{
          chart_to_model(SeatingChart(std::move(table_of)), EncodingMap(guests, tables))};
    }
    for (std::uint32_t g = guests; g-- > 0;) {
      if (++seat[g] < tables) break;
      seat[g] = 0;
    }
  }
  return Unsatisfiable{};
}

}  // namespace cnfsat
