#include "cnfsat/cnf.hpp"

#include <algorithm>
#include <string>

namespace cnfsat {

Literal Literal::from_dimacs(std::int64_t k) {
  const auto id = static_cast<std::uint32_t>(k > 0 ? k : -k);
  return {Variable{id}, k > 0 ? Polarity::positive : Polarity::negative};
}

Clause::Clause(std::vector<Literal> literals) : lits_(std::move(literals)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

bool Clause::contains(Literal l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

Clause canonicalize(std::span<const Literal> raw_literals) {
  return Clause(std::vector<Literal>(raw_literals.begin(), raw_literals.end()));
}

bool is_tautology(const Clause& c) {
  // Sorted order puts +v immediately before -v.
  const auto lits = c.literals();
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (lits[i - 1].var() == lits[i].var()) return true;
  }
  return false;
}

Formula::Formula(std::size_t num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (clauses_[i].max_var() > num_vars_) {
      throw InvalidFormula("clause " + std::to_string(i) + " mentions variable " +
                           std::to_string(clauses_[i].max_var()) + " but num_vars is " +
                           std::to_string(num_vars_));
    }
  }
}

Model::Model(const std::vector<bool>& values) : values_(values.begin(), values.end()) {}

void Model::check(Variable v) const {
  if (v.id == 0 || v.id > values_.size()) {
    throw ModelRangeError("variable " + std::to_string(v.id) + " outside model range 1.." +
                          std::to_string(values_.size()));
  }
}

bool Model::value(Variable v) const {
  check(v);
  return values_[v.index()] != 0;
}

void Model::set(Variable v, bool value) {
  check(v);
  values_[v.index()] = value ? 1 : 0;
}

void Model::flip(Variable v) {
  check(v);
  values_[v.index()] ^= 1U;
}

std::vector<std::int64_t> Model::to_dimacs() const {
  std::vector<std::int64_t> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const auto id = static_cast<std::int64_t>(i + 1);
    out.push_back(values_[i] ? id : -id);
  }
  return out;
}

bool eval_clause(const Clause& c, const Model& m) {
  return std::any_of(c.begin(), c.end(), [&](Literal l) { return m.satisfies(l); });
}

bool eval_formula(const Formula& f, const Model& m) {
  const auto clauses = f.clauses();
  return std::all_of(clauses.begin(), clauses.end(),
                     [&](const Clause& c) { return eval_clause(c, m); });
}

std::size_t count_satisfied(const Formula& f, const Model& m) {
  const auto clauses = f.clauses();
  return static_cast<std::size_t>(std::count_if(
      clauses.begin(), clauses.end(), [&](const Clause& c) { return eval_clause(c, m); }));
}

const Model* model_of(const Verdict& v) {
  if (const auto* sat = std::get_if<Satisfiable>(&v); sat && sat->model) return &*sat->model;
  return nullptr;
}

std::string to_string(UnknownReason r) {
  switch (r) {
    case UnknownReason::flip_budget_exhausted:
      return "flip budget exhausted";
    case UnknownReason::resource_limit_exceeded:
      return "resource limit exceeded";
  }
  return "unknown";
}

std::string to_string(const Verdict& v) {
  if (is_sat(v)) return "SATISFIABLE";
  if (is_unsat(v)) return "UNSATISFIABLE";
  return "UNKNOWN (" + to_string(std::get<Unknown>(v).reason) + ")";
}

}  // namespace cnfsat

std::size_t std::hash<cnfsat::Clause>::operator()(const cnfsat::Clause& c) const noexcept {
  // FNV-1a over literal codes.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto l : c) {
    h ^= l.code();
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}
