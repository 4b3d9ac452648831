#pragma once

// Canonical CNF values: variables, literals, clauses, formulas, models and
// solver verdicts. Everything here is an immutable value once built, except
// Model which solvers mutate while searching.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace cnfsat {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model was queried for a variable outside its range.
class ModelRangeError : public Error {
 public:
  using Error::Error;
};

/// A formula was built with a literal whose variable exceeds num_vars.
class InvalidFormula : public Error {
 public:
  using Error::Error;
};

/// Propositional variable, 1-based and dense (DIMACS numbering).
struct Variable {
  std::uint32_t id = 0;

  constexpr Variable() = default;
  constexpr explicit Variable(std::uint32_t v) : id(v) {}

  /// Zero-based slot for flat arrays.
  [[nodiscard]] constexpr std::size_t index() const { return id - 1; }

  friend constexpr auto operator<=>(Variable, Variable) = default;
};

enum class Polarity : std::uint8_t { positive = 0, negative = 1 };

/// A variable or its negation. Ordered by (variable, polarity) with the
/// positive literal first.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Variable v, Polarity p)
      : code_(2 * (v.id - 1) + static_cast<std::uint32_t>(p)) {}

  static constexpr Literal positive(Variable v) { return {v, Polarity::positive}; }
  static constexpr Literal negative(Variable v) { return {v, Polarity::negative}; }
  static constexpr Literal from_code(std::uint32_t code) {
    Literal l;
    l.code_ = code;
    return l;
  }
  /// `k > 0` is the positive literal of variable k, `k < 0` the negative one.
  /// `k == 0` is not a literal; callers must reject it.
  static Literal from_dimacs(std::int64_t k);

  [[nodiscard]] constexpr Variable var() const { return Variable{(code_ >> 1) + 1}; }
  [[nodiscard]] constexpr Polarity polarity() const {
    return static_cast<Polarity>(code_ & 1U);
  }
  [[nodiscard]] constexpr bool is_positive() const { return (code_ & 1U) == 0; }
  [[nodiscard]] constexpr std::uint32_t code() const { return code_; }
  [[nodiscard]] std::int64_t to_dimacs() const {
    const auto id = static_cast<std::int64_t>(var().id);
    return is_positive() ? id : -id;
  }

  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  std::uint32_t code_ = 0;
};

[[nodiscard]] constexpr Literal negate(Literal l) {
  return Literal::from_code(l.code() ^ 1U);
}

/// Disjunction of literals, kept sorted and duplicate-free so that
/// structural equality coincides with equality of literal sets. Tautologies
/// are representable; the empty clause is the unsatisfiable clause.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals)
      : Clause(std::vector<Literal>(literals)) {}

  [[nodiscard]] std::span<const Literal> literals() const { return lits_; }
  [[nodiscard]] std::size_t size() const { return lits_.size(); }
  [[nodiscard]] bool empty() const { return lits_.empty(); }
  [[nodiscard]] auto begin() const { return lits_.begin(); }
  [[nodiscard]] auto end() const { return lits_.end(); }
  [[nodiscard]] bool contains(Literal l) const;
  /// Largest variable id mentioned, 0 for the empty clause.
  [[nodiscard]] std::uint32_t max_var() const {
    return lits_.empty() ? 0 : lits_.back().var().id;
  }

  friend bool operator==(const Clause&, const Clause&) = default;
  friend auto operator<=>(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> lits_;
};

[[nodiscard]] Clause canonicalize(std::span<const Literal> raw_literals);
[[nodiscard]] bool is_tautology(const Clause& c);

/// Conjunction of clauses over variables 1..num_vars.
class Formula {
 public:
  Formula() = default;
  /// Throws InvalidFormula if a clause mentions a variable above num_vars.
  Formula(std::size_t num_vars, std::vector<Clause> clauses);

  [[nodiscard]] std::size_t num_vars() const { return num_vars_; }
  [[nodiscard]] std::span<const Clause> clauses() const { return clauses_; }
  [[nodiscard]] std::size_t size() const { return clauses_.size(); }
  [[nodiscard]] bool empty() const { return clauses_.empty(); }

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<Clause> clauses_;
};

/// Total truth assignment over variables 1..num_vars.
class Model {
 public:
  Model() = default;
  explicit Model(std::size_t num_vars, bool fill = false)
      : values_(num_vars, fill ? 1 : 0) {}
  explicit Model(const std::vector<bool>& values);

  [[nodiscard]] std::size_t num_vars() const { return values_.size(); }
  /// Throws ModelRangeError when v is outside 1..num_vars.
  [[nodiscard]] bool value(Variable v) const;
  [[nodiscard]] bool satisfies(Literal l) const { return value(l.var()) == l.is_positive(); }
  void set(Variable v, bool value);
  void flip(Variable v);

  /// Signed DIMACS literals, one per variable in order.
  [[nodiscard]] std::vector<std::int64_t> to_dimacs() const;

  friend bool operator==(const Model&, const Model&) = default;

 private:
  void check(Variable v) const;
  std::vector<std::uint8_t> values_;
};

[[nodiscard]] bool eval_clause(const Clause& c, const Model& m);
[[nodiscard]] bool eval_formula(const Formula& f, const Model& m);
[[nodiscard]] std::size_t count_satisfied(const Formula& f, const Model& m);

// Solver verdicts.

struct Satisfiable {
  /// Present when the solver constructs a witness; PL-Resolution does not.
  std::optional<Model> model;
  friend bool operator==(const Satisfiable&, const Satisfiable&) = default;
};

struct Unsatisfiable {
  friend bool operator==(const Unsatisfiable&, const Unsatisfiable&) = default;
};

enum class UnknownReason { flip_budget_exhausted, resource_limit_exceeded };

struct Unknown {
  UnknownReason reason;
  friend bool operator==(const Unknown&, const Unknown&) = default;
};

using Verdict = std::variant<Satisfiable, Unsatisfiable, Unknown>;

[[nodiscard]] inline bool is_sat(const Verdict& v) { return std::holds_alternative<Satisfiable>(v); }
[[nodiscard]] inline bool is_unsat(const Verdict& v) { return std::holds_alternative<Unsatisfiable>(v); }
[[nodiscard]] inline bool is_unknown(const Verdict& v) { return std::holds_alternative<Unknown>(v); }
/// The witness carried by a Satisfiable verdict, if any.
[[nodiscard]] const Model* model_of(const Verdict& v);
[[nodiscard]] std::string to_string(const Verdict& v);
[[nodiscard]] std::string to_string(UnknownReason r);

}  // namespace cnfsat

template <>
struct std::hash<cnfsat::Clause> {
  std::size_t operator()(const cnfsat::Clause& c) const noexcept;
};
