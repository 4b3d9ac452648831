#pragma once

// Wedding seating: M guests, N uncapacitated tables, and a relation on every
// unordered guest pair. Friends must share a table, Enemies must not.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cnfsat/cnf.hpp"

namespace cnfsat {

enum class Relation : std::uint8_t { indifferent, friends, enemies };

class InvalidProbability : public Error {
 public:
  using Error::Error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// A model does not place some guest at exactly one table.
class NotAFunction : public Error {
 public:
  using Error::Error;
};

/// Unordered guest pair, stored with first < second (1-based guests).
struct GuestPair {
  std::uint32_t first = 0;
  std::uint32_t second = 0;
  friend constexpr auto operator<=>(const GuestPair&, const GuestPair&) = default;
};

class SeatingInstance {
 public:
  /// All pairs start Indifferent. Throws InvalidInstance unless M, N >= 1.
  SeatingInstance(std::uint32_t num_guests, std::uint32_t num_tables);

  [[nodiscard]] std::uint32_t num_guests() const { return guests_; }
  [[nodiscard]] std::uint32_t num_tables() const { return tables_; }
  [[nodiscard]] std::size_t num_pairs() const { return relations_.size(); }

  [[nodiscard]] Relation relation(std::uint32_t i, std::uint32_t j) const;
  void set_relation(std::uint32_t i, std::uint32_t j, Relation r);

  /// Pairs carrying relation r, in lexicographic order.
  [[nodiscard]] std::vector<GuestPair> pairs(Relation r) const;
  [[nodiscard]] std::size_t count(Relation r) const;

  friend bool operator==(const SeatingInstance&, const SeatingInstance&) = default;

 private:
  [[nodiscard]] std::size_t slot(std::uint32_t i, std::uint32_t j) const;

  std::uint32_t guests_;
  std::uint32_t tables_;
  std::vector<Relation> relations_;  // upper triangle, row-major
};

/// Guest/table <-> variable numbering: var(i, n) = (i - 1) * N + n.
class EncodingMap {
 public:
  EncodingMap(std::uint32_t num_guests, std::uint32_t num_tables)
      : guests_(num_guests), tables_(num_tables) {}

  [[nodiscard]] std::uint32_t num_guests() const { return guests_; }
  [[nodiscard]] std::uint32_t num_tables() const { return tables_; }
  [[nodiscard]] std::size_t num_vars() const {
    return static_cast<std::size_t>(guests_) * tables_;
  }

  [[nodiscard]] Variable var_of(std::uint32_t guest, std::uint32_t table) const;
  /// (guest, table) for a variable in 1..M*N.
  [[nodiscard]] std::pair<std::uint32_t, std::uint32_t> seat_of(Variable v) const;

  friend bool operator==(const EncodingMap&, const EncodingMap&) = default;

 private:
  std::uint32_t guests_;
  std::uint32_t tables_;
};

/// Table (1-based) for every guest (1-based).
class SeatingChart {
 public:
  explicit SeatingChart(std::vector<std::uint32_t> table_of) : table_of_(std::move(table_of)) {}

  [[nodiscard]] std::uint32_t num_guests() const {
    return static_cast<std::uint32_t>(table_of_.size());
  }
  [[nodiscard]] std::uint32_t table_of(std::uint32_t guest) const { return table_of_.at(guest - 1); }

  friend bool operator==(const SeatingChart&, const SeatingChart&) = default;

 private:
  std::vector<std::uint32_t> table_of_;
};

struct SeatingEncoding {
  Formula formula;
  EncodingMap map;
};

/// Each pair is drawn in lexicographic order from one uniform_real() value u:
/// u < f gives Friends, f <= u < f + e Enemies, otherwise Indifferent.
/// Throws InvalidProbability unless f, e >= 0 and f + e <= 1.
[[nodiscard]] SeatingInstance generate_instance(std::uint32_t num_guests,
                                                std::uint32_t num_tables, double f, double e,
                                                std::uint64_t seed);

/// Clause groups, in order:
///   at-least-one table per guest           M clauses of width N
///   at-most-one table per guest            M * C(N, 2) binary clauses
///   Friends {i, j} share every table       2 * F * N binary clauses
///   Enemies {i, j} never share a table     E * N binary clauses
[[nodiscard]] SeatingEncoding encode(const SeatingInstance& inst);

/// Expected clause count of encode(inst).
[[nodiscard]] std::size_t encoded_clause_count(const SeatingInstance& inst);

/// Throws NotAFunction if some guest has zero or several true tables.
[[nodiscard]] SeatingChart decode(const Model& m, const EncodingMap& map);

/// Checks the Friends/Enemies constraints directly on a chart.
[[nodiscard]] bool chart_satisfies(const SeatingChart& chart, const SeatingInstance& inst);

/// Model with exactly X(i, table_of(i)) true.
[[nodiscard]] Model chart_to_model(const SeatingChart& chart, const EncodingMap& map);

// Instance text format:
//   seating <M> <N>
//   <i> <j> F|E        one line per non-Indifferent pair, i < j
// Blank lines and lines starting with '#' are ignored when reading.
[[nodiscard]] std::string format_instance(const SeatingInstance& inst);
[[nodiscard]] SeatingInstance parse_instance(std::string_view text);

[[nodiscard]] std::string format_chart(const SeatingChart& chart);

}  // namespace cnfsat
