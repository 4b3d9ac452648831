#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cnfsat/cnf.hpp"

namespace cnfsat {

enum class DimacsErrorKind {
  missing_header,         ///< no `p cnf` line before the first clause, or none at all
  malformed_header,       ///< header present but not `p cnf <vars> <clauses>`
  zero_inside_header,     ///< clause data (e.g. a `0` terminator) on the header line
  var_out_of_range,       ///< |k| > num_vars
  clause_count_mismatch,  ///< strict mode: clause count differs from the header
  trailing_garbage,       ///< non-integer token, or strict mode: unterminated last clause
};

class DimacsError : public Error {
 public:
  DimacsError(DimacsErrorKind kind, std::size_t line, const std::string& what);
  [[nodiscard]] DimacsErrorKind kind() const { return kind_; }
  /// 1-based input line, 0 when not tied to a line.
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  DimacsErrorKind kind_;
  std::size_t line_;
};

struct DimacsOptions {
  /// Clause-count mismatches and unterminated final clauses become errors
  /// instead of warnings.
  bool strict = false;
};

struct DimacsDocument {
  /// Text of each `c` line without the leading "c " marker, in input order.
  std::vector<std::string> comments;
  Formula formula;
  /// Lenient-mode diagnostics; empty for a clean input.
  std::vector<std::string> warnings;
};

/// Reads DIMACS CNF. Clauses are 0-terminated integer runs and may span
/// lines or share a line. Everything after a lone `%` token is ignored.
[[nodiscard]] DimacsDocument parse_dimacs(std::string_view text, DimacsOptions options = {});
[[nodiscard]] DimacsDocument parse_dimacs(std::istream& in, DimacsOptions options = {});

/// A model listing was malformed: not integers, a variable outside
/// 1..num_vars, a variable given twice, or a variable missing.
class ModelFormatError : public Error {
 public:
  using Error::Error;
};

/// Reads a total model from solver-style `v <lit> ... 0` lines or from one
/// signed literal per line. `c` and `s` lines are skipped, `0` is ignored.
[[nodiscard]] Model parse_model(std::string_view text, std::size_t num_vars);

/// Emits comments, the header, then one 0-terminated clause per line.
[[nodiscard]] std::string serialize_dimacs(const DimacsDocument& doc);
[[nodiscard]] std::string serialize_dimacs(const Formula& f);

}  // namespace cnfsat
