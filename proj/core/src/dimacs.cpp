#include "cnfsat/dimacs.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <iterator>
#include <limits>
#include <optional>

#include <fmt/format.h>

namespace cnfsat {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<std::int64_t> parse_int(std::string_view token) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

class Parser {
 public:
  explicit Parser(DimacsOptions options) : options_(options) {}

  DimacsDocument run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size() && !stopped_) {
      const std::size_t eol = text.find('\n', pos);
      const std::size_t end = eol == std::string_view::npos ? text.size() : eol;
      ++line_no;
      line(text.substr(pos, end - pos), line_no);
      if (eol == std::string_view::npos) break;
      pos = eol + 1;
    }
    return finish(line_no);
  }

 private:
  void line(std::string_view raw, std::size_t line_no) {
    std::size_t first = 0;
    while (first < raw.size() && is_space(raw[first])) ++first;
    const std::string_view body = raw.substr(first);
    if (body.empty()) return;

    if (body[0] == 'c' && (body.size() == 1 || is_space(body[1]))) {
      std::string_view text = body.substr(1);
      if (!text.empty() && text[0] == ' ') text.remove_prefix(1);
      while (!text.empty() && text.back() == '\r') text.remove_suffix(1);
      doc_.comments.emplace_back(text);
      return;
    }
    if (body[0] == 'p' && (body.size() == 1 || is_space(body[1]))) {
      header(split_tokens(body), line_no);
      return;
    }
    for (const auto token : split_tokens(body)) {
      if (token == "%") {
        stopped_ = true;
        return;
      }
      literal(token, line_no);
    }
  }

  void header(const std::vector<std::string_view>& tokens, std::size_t line_no) {
    if (header_seen_) {
      throw DimacsError(DimacsErrorKind::malformed_header, line_no, "duplicate 'p' line");
    }
    if (tokens.size() < 4 || tokens[1] != "cnf") {
      throw DimacsError(DimacsErrorKind::malformed_header, line_no,
                        "expected 'p cnf <num_vars> <num_clauses>'");
    }
    const auto vars = parse_int(tokens[2]);
    const auto clauses = parse_int(tokens[3]);
    if (!vars || !clauses || *vars < 0 || *clauses < 0 ||
        *vars > std::numeric_limits<std::int32_t>::max()) {
      throw DimacsError(DimacsErrorKind::malformed_header, line_no,
                        "header counts must be non-negative integers");
    }
    if (tokens.size() > 4) {
      if (parse_int(tokens[4])) {
        throw DimacsError(DimacsErrorKind::zero_inside_header, line_no,
                          "clause data on the header line");
      }
      throw DimacsError(DimacsErrorKind::malformed_header, line_no,
                        fmt::format("unexpected token '{}' in header", tokens[4]));
    }
    header_seen_ = true;
    num_vars_ = *vars;
    declared_clauses_ = *clauses;
  }

  void literal(std::string_view token, std::size_t line_no) {
    const auto k = parse_int(token);
    if (!k) {
      throw DimacsError(DimacsErrorKind::trailing_garbage, line_no,
                        fmt::format("unexpected token '{}'", token));
    }
    if (!header_seen_) {
      throw DimacsError(DimacsErrorKind::missing_header, line_no,
                        "clause data before the 'p cnf' header");
    }
    if (*k == 0) {
      clauses_.emplace_back(std::move(pending_));
      pending_.clear();
      return;
    }
    const std::int64_t magnitude = *k < 0 ? -*k : *k;
    if (magnitude > num_vars_) {
      throw DimacsError(DimacsErrorKind::var_out_of_range, line_no,
                        fmt::format("literal {} exceeds declared num_vars {}", *k, num_vars_));
    }
    pending_.push_back(Literal::from_dimacs(*k));
    pending_line_ = line_no;
  }

  DimacsDocument finish(std::size_t last_line) {
    if (!header_seen_) {
      throw DimacsError(DimacsErrorKind::missing_header, 0, "no 'p cnf' header found");
    }
    if (!pending_.empty()) {
      if (options_.strict) {
        throw DimacsError(DimacsErrorKind::trailing_garbage, pending_line_,
                          "last clause is not terminated by 0");
      }
      doc_.warnings.push_back(
          fmt::format("line {}: last clause is not terminated by 0; accepted", pending_line_));
      clauses_.emplace_back(std::move(pending_));
    }
    const auto count = static_cast<std::int64_t>(clauses_.size());
    if (count != declared_clauses_) {
      auto msg = fmt::format("header declares {} clauses but {} were read", declared_clauses_,
                             count);
      if (options_.strict) {
        throw DimacsError(DimacsErrorKind::clause_count_mismatch, last_line, msg);
      }
      doc_.warnings.push_back(std::move(msg));
    }
    doc_.formula = Formula(static_cast<std::size_t>(num_vars_), std::move(clauses_));
    return std::move(doc_);
  }

  DimacsOptions options_;
  DimacsDocument doc_;
  bool header_seen_ = false;
  bool stopped_ = false;
  std::int64_t num_vars_ = 0;
  std::int64_t declared_clauses_ = 0;
  std::vector<Clause> clauses_;
  std::vector<Literal> pending_;
  std::size_t pending_line_ = 0;
};

}  // namespace

DimacsError::DimacsError(DimacsErrorKind kind, std::size_t line, const std::string& what)
    : Error(line == 0 ? what : fmt::format("line {}: {}", line, what)), kind_(kind), line_(line) {}

DimacsDocument parse_dimacs(std::string_view text, DimacsOptions options) {
  return Parser(options).run(text);
}

DimacsDocument parse_dimacs(std::istream& in, DimacsOptions options) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_dimacs(text, options);
}

Model parse_model(std::string_view text, std::size_t num_vars) {
  Model m(num_vars);
  std::vector<bool> seen(num_vars, false);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    auto tokens = split_tokens(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (tokens.empty() || tokens[0] == "c" || tokens[0] == "s") continue;
    const std::size_t first = tokens[0] == "v" ? 1 : 0;
    for (std::size_t t = first; t < tokens.size(); ++t) {
      const auto k = parse_int(tokens[t]);
      if (!k) {
        throw ModelFormatError(fmt::format("line {}: '{}' is not a literal", line_no, tokens[t]));
      }
      if (*k == 0) continue;
      const std::int64_t magnitude = *k < 0 ? -*k : *k;
      if (static_cast<std::uint64_t>(magnitude) > num_vars) {
        throw ModelFormatError(
            fmt::format("line {}: literal {} outside 1..{}", line_no, *k, num_vars));
      }
      const auto lit = Literal::from_dimacs(*k);
      if (seen[lit.var().index()]) {
        throw ModelFormatError(
            fmt::format("line {}: variable {} assigned twice", line_no, lit.var().id));
      }
      seen[lit.var().index()] = true;
      m.set(lit.var(), lit.is_positive());
    }
  }
  for (std::size_t v = 0; v < num_vars; ++v) {
    if (!seen[v]) throw ModelFormatError(fmt::format("variable {} has no value", v + 1));
  }
  return m;
}

std::string serialize_dimacs(const DimacsDocument& doc) {
  std::string out;
  for (const auto& c : doc.comments) {
    out += c.empty() ? "c\n" : fmt::format("c {}\n", c);
  }
  const auto& f = doc.formula;
  out += fmt::format("p cnf {} {}\n", f.num_vars(), f.size());
  for (const auto& clause : f.clauses()) {
    for (const auto l : clause) out += fmt::format("{} ", l.to_dimacs());
    out += "0\n";
  }
  return out;
}

std::string serialize_dimacs(const Formula& f) {
  return serialize_dimacs(DimacsDocument{{}, f, {}});
}

}  // namespace cnfsat
