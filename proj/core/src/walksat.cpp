#include "cnfsat/walksat.hpp"

#include <algorithm>
#include <vector>

#include <fmt/format.h>

namespace cnfsat {

namespace {

void validate(const WalkSatParams& params) {
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw InvalidParams(fmt::format("walk probability must lie in [0, 1], got {}", params.p));
  }
  if (params.max_flips == 0) throw InvalidParams("max_flips must be at least 1");
}

Model random_model(std::size_t num_vars, Rng& rng) {
  Model m(num_vars);
  for (std::size_t v = 1; v <= num_vars; ++v) {
    m.set(Variable{static_cast<std::uint32_t>(v)}, rng.coin());
  }
  return m;
}

// Shared move rule; `score(v)` is the satisfied-clause count after flipping v.
template <typename Score>
Variable pick_variable(const Clause& clause, double p, Rng& rng, Score&& score) {
  const auto lits = clause.literals();
  if (rng.uniform_real() < p) return lits[rng.uniform_index(lits.size())].var();

  std::vector<Variable> best;
  std::size_t best_score = 0;
  for (const auto l : lits) {
    const std::size_t s = score(l.var());
    if (best.empty() || s > best_score) {
      best.assign(1, l.var());
      best_score = s;
    } else if (s == best_score) {
      best.push_back(l.var());
    }
  }
  return best[rng.uniform_index(best.size())];
}

bool has_empty_clause(const Formula& f) {
  const auto cs = f.clauses();
  return std::any_of(cs.begin(), cs.end(), [](const Clause& c) { return c.empty(); });
}

// Per-clause true-literal counters with occurrence lists, so that a flip and
// a candidate score cost O(occurrences of the variable).
class IncrementalState {
 public:
  IncrementalState(const Formula& f, Model model)
      : f_(f), model_(std::move(model)), occurs_(2 * f.num_vars()), true_count_(f.size(), 0) {
    const auto clauses = f.clauses();
    for (std::size_t c = 0; c < clauses.size(); ++c) {
      for (const auto l : clauses[c]) {
        occurs_[l.code()].push_back(c);
        if (model_.satisfies(l)) ++true_count_[c];
      }
    }
    for (const auto n : true_count_) satisfied_ += n > 0 ? 1 : 0;
  }

  [[nodiscard]] const Model& model() const { return model_; }
  [[nodiscard]] std::size_t unsat_count() const { return f_.size() - satisfied_; }

  [[nodiscard]] std::vector<std::size_t> false_clauses() const {
    std::vector<std::size_t> out;
    out.reserve(unsat_count());
    for (std::size_t c = 0; c < true_count_.size(); ++c) {
      if (true_count_[c] == 0) out.push_back(c);
    }
    return out;
  }

  void flip(Variable v) {
    const bool now = model_.value(v);
    const Literal was_true = now ? Literal::positive(v) : Literal::negative(v);
    for (const auto c : occurs_[was_true.code()]) {
      if (--true_count_[c] == 0) --satisfied_;
    }
    for (const auto c : occurs_[negate(was_true).code()]) {
      if (true_count_[c]++ == 0) ++satisfied_;
    }
    model_.flip(v);
  }

  [[nodiscard]] std::size_t score_after_flip(Variable v) {
    flip(v);
    const std::size_t s = satisfied_;
    flip(v);
    return s;
  }

 private:
  const Formula& f_;
  Model model_;
  std::vector<std::vector<std::size_t>> occurs_;
  std::vector<std::uint32_t> true_count_;
  std::size_t satisfied_ = 0;
};

}  // namespace

Variable choose_flip_var(const Clause& clause, const Model& model, const Formula& f, double p,
                         Rng& rng) {
  Model scratch = model;
  return pick_variable(clause, p, rng, [&](Variable v) {
    scratch.flip(v);
    const std::size_t s = count_satisfied(f, scratch);
    scratch.flip(v);
    return s;
  });
}

WalkSatResult walksat(const Formula& f, const WalkSatParams& params) {
  validate(params);
  Rng rng(params.seed);
  IncrementalState state(f, random_model(f.num_vars(), rng));
  if (has_empty_clause(f)) {
    return {Unknown{UnknownReason::flip_budget_exhausted}, {0, 0, state.unsat_count()}};
  }
  const auto clauses = f.clauses();
  for (std::size_t flip = 0; flip < params.max_flips; ++flip) {
    if (state.unsat_count() == 0) return {Satisfiable{state.model()}, {flip, 0, 0}};
    const auto falsified = state.false_clauses();
    const Clause& clause = clauses[falsified[rng.uniform_index(falsified.size())]];
    state.flip(pick_variable(clause, params.p, rng,
                             [&](Variable v) { return state.score_after_flip(v); }));
  }
  return {Unknown{UnknownReason::flip_budget_exhausted},
          {params.max_flips, 0, state.unsat_count()}};
}

namespace detail {

WalkSatResult walksat_reference(const Formula& f, const WalkSatParams& params) {
  validate(params);
  Rng rng(params.seed);
  Model model = random_model(f.num_vars(), rng);
  auto unsat = [&] { return f.size() - count_satisfied(f, model); };
  if (has_empty_clause(f)) {
    return {Unknown{UnknownReason::flip_budget_exhausted}, {0, 0, unsat()}};
  }
  const auto clauses = f.clauses();
  for (std::size_t flip = 0; flip < params.max_flips; ++flip) {
    if (eval_formula(f, model)) return {Satisfiable{model}, {flip, 0, 0}};
    std::vector<std::size_t> falsified;
    for (std::size_t c = 0; c < clauses.size(); ++c) {
      if (!eval_clause(clauses[c], model)) falsified.push_back(c);
    }
    const Clause& clause = clauses[falsified[rng.uniform_index(falsified.size())]];
    model.flip(choose_flip_var(clause, model, f, params.p, rng));
  }
  return {Unknown{UnknownReason::flip_budget_exhausted}, {params.max_flips, 0, unsat()}};
}

}  // namespace detail

}  // namespace cnfsat
