#include "cnfsat/seating.hpp"

#include <charconv>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "cnfsat/rng.hpp"

namespace cnfsat {

SeatingInstance::SeatingInstance(std::uint32_t num_guests, std::uint32_t num_tables)
    : guests_(num_guests), tables_(num_tables) {
  if (num_guests == 0 || num_tables == 0) {
    throw InvalidInstance("seating instance needs at least one guest and one table");
  }
  const auto m = static_cast<std::size_t>(num_guests);
  relations_.assign(m * (m - 1) / 2, Relation::indifferent);
}

std::size_t SeatingInstance::slot(std::uint32_t i, std::uint32_t j) const {
  if (i > j) std::swap(i, j);
  if (i == 0 || i == j || j > guests_) {
    throw InvalidInstance(fmt::format("invalid guest pair ({}, {}) for {} guests", i, j, guests_));
  }
  // Row i (0-based r) of the strict upper triangle starts after
  // r*(M-1) - r*(r-1)/2 entries.
  const std::size_t r = i - 1;
  const std::size_t m = guests_;
  return r * (m - 1) - r * (r - 1) / 2 + (j - i - 1);
}

Relation SeatingInstance::relation(std::uint32_t i, std::uint32_t j) const {
  return relations_[slot(i, j)];
}

void SeatingInstance::set_relation(std::uint32_t i, std::uint32_t j, Relation r) {
  relations_[slot(i, j)] = r;
}

std::vector<GuestPair> SeatingInstance::pairs(Relation r) const {
  std::vector<GuestPair> out;
  std::size_t k = 0;
  for (std::uint32_t i = 1; i <= guests_; ++i) {
    for (std::uint32_t j = i + 1; j <= guests_; ++j, ++k) {
      if (relations_[k] == r) out.push_back({i, j});
    }
  }
  return out;
}

std::size_t SeatingInstance::count(Relation r) const {
  std::size_t n = 0;
  for (const auto rel : relations_) n += rel == r ? 1 : 0;
  return n;
}

Variable EncodingMap::var_of(std::uint32_t guest, std::uint32_t table) const {
  if (guest == 0 || guest > guests_ || table == 0 || table > tables_) {
    throw InvalidInstance(fmt::format("no variable for guest {} at table {}", guest, table));
  }
  return Variable{(guest - 1) * tables_ + table};
}

std::pair<std::uint32_t, std::uint32_t> EncodingMap::seat_of(Variable v) const {
  if (v.id == 0 || v.id > num_vars()) {
    throw InvalidInstance(fmt::format("variable {} outside 1..{}", v.id, num_vars()));
  }
  return {static_cast<std::uint32_t>(v.index() / tables_) + 1,
          static_cast<std::uint32_t>(v.index() % tables_) + 1};
}

SeatingInstance generate_instance(std::uint32_t num_guests, std::uint32_t num_tables, double f,
                                  double e, std::uint64_t seed) {
  if (!(f >= 0.0 && e >= 0.0 && f + e <= 1.0 + 1e-12)) {
    throw InvalidProbability(
        fmt::format("need f >= 0, e >= 0 and f + e <= 1 (got f={}, e={})", f, e));
  }
  SeatingInstance inst(num_guests, num_tables);
  Rng rng(seed);
  for (std::uint32_t i = 1; i <= num_guests; ++i) {
    for (std::uint32_t j = i + 1; j <= num_guests; ++j) {
      const double u = rng.uniform_real();
      if (u < f) {
        inst.set_relation(i, j, Relation::friends);
      } else if (u < f + e) {
        inst.set_relation(i, j, Relation::enemies);
      }
    }
  }
  return inst;
}

SeatingEncoding encode(const SeatingInstance& inst) {
  const EncodingMap map(inst.num_guests(), inst.num_tables());
  const auto guests = inst.num_guests();
  const auto tables = inst.num_tables();
  auto x = [&](std::uint32_t i, std::uint32_t n) { return Literal::positive(map.var_of(i, n)); };
  auto not_x = [&](std::uint32_t i, std::uint32_t n) {
    return Literal::negative(map.var_of(i, n));
  };

  std::vector<Clause> clauses;
  clauses.reserve(encoded_clause_count(inst));

  for (std::uint32_t i = 1; i <= guests; ++i) {
    std::vector<Literal> at_least_one;
    at_least_one.reserve(tables);
    for (std::uint32_t n = 1; n <= tables; ++n) at_least_one.push_back(x(i, n));
    clauses.emplace_back(std::move(at_least_one));
  }
  for (std::uint32_t i = 1; i <= guests; ++i) {
    for (std::uint32_t k = 1; k <= tables; ++k) {
      for (std::uint32_t n = k + 1; n <= tables; ++n) {
        clauses.push_back(Clause{not_x(i, k), not_x(i, n)});
      }
    }
  }
  for (const auto [i, j] : inst.pairs(Relation::friends)) {
    for (std::uint32_t n = 1; n <= tables; ++n) {
      clauses.push_back(Clause{not_x(i, n), x(j, n)});
      clauses.push_back(Clause{not_x(j, n), x(i, n)});
    }
  }
  for (const auto [i, j] : inst.pairs(Relation::enemies)) {
    for (std::uint32_t n = 1; n <= tables; ++n) {
      clauses.push_back(Clause{not_x(i, n), not_x(j, n)});
    }
  }
  return {Formula(map.num_vars(), std::move(clauses)), map};
}

std::size_t encoded_clause_count(const SeatingInstance& inst) {
  const std::size_t m = inst.num_guests();
  const std::size_t n = inst.num_tables();
  return m + m * (n * (n - 1) / 2) + 2 * inst.count(Relation::friends) * n +
         inst.count(Relation::enemies) * n;
}

SeatingChart decode(const Model& m, const EncodingMap& map) {
  if (m.num_vars() < map.num_vars()) {
    throw NotAFunction(fmt::format("model covers {} variables, encoding needs {}", m.num_vars(),
                                   map.num_vars()));
  }
  std::vector<std::uint32_t> table_of(map.num_guests(), 0);
  for (std::uint32_t i = 1; i <= map.num_guests(); ++i) {
    std::uint32_t seated = 0;
    for (std::uint32_t n = 1; n <= map.num_tables(); ++n) {
      if (!m.value(map.var_of(i, n))) continue;
      if (seated != 0) {
        throw NotAFunction(
            fmt::format("guest {} is seated at tables {} and {}", i, seated, n));
      }
      seated = n;
    }
    if (seated == 0) throw NotAFunction(fmt::format("guest {} has no table", i));
    table_of[i - 1] = seated;
  }
  return SeatingChart(std::move(table_of));
}

bool chart_satisfies(const SeatingChart& chart, const SeatingInstance& inst) {
  if (chart.num_guests() != inst.num_guests()) return false;
  for (std::uint32_t i = 1; i <= inst.num_guests(); ++i) {
    const auto t = chart.table_of(i);
    if (t == 0 || t > inst.num_tables()) return false;
  }
  for (const auto [i, j] : inst.pairs(Relation::friends)) {
    if (chart.table_of(i) != chart.table_of(j)) return false;
  }
  for (const auto [i, j] : inst.pairs(Relation::enemies)) {
    if (chart.table_of(i) == chart.table_of(j)) return false;
  }
  return true;
}

Model chart_to_model(const SeatingChart& chart, const EncodingMap& map) {
  Model m(map.num_vars());
  for (std::uint32_t i = 1; i <= chart.num_guests(); ++i) {
    m.set(map.var_of(i, chart.table_of(i)), true);
  }
  return m;
}

std::string format_instance(const SeatingInstance& inst) {
  std::string out = fmt::format("seating {} {}\n", inst.num_guests(), inst.num_tables());
  for (std::uint32_t i = 1; i <= inst.num_guests(); ++i) {
    for (std::uint32_t j = i + 1; j <= inst.num_guests(); ++j) {
      switch (inst.relation(i, j)) {
        case Relation::friends:
          out += fmt::format("{} {} F\n", i, j);
          break;
        case Relation::enemies:
          out += fmt::format("{} {} E\n", i, j);
          break;
        case Relation::indifferent:
          break;
      }
    }
  }
  return out;
}

namespace {

std::uint32_t parse_u32(const std::string& token, std::size_t line_no) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InvalidInstance(fmt::format("line {}: expected a non-negative integer, got '{}'",
                                      line_no, token));
  }
  return v;
}

}  // namespace

SeatingInstance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<SeatingInstance> inst;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (!inst) {
      if (tok.size() != 3 || tok[0] != "seating") {
        throw InvalidInstance(fmt::format("line {}: expected 'seating <M> <N>'", line_no));
      }
      inst.emplace(parse_u32(tok[1], line_no), parse_u32(tok[2], line_no));
      continue;
    }
    if (tok.size() != 3 || (tok[2] != "F" && tok[2] != "E")) {
      throw InvalidInstance(fmt::format("line {}: expected '<i> <j> F|E'", line_no));
    }
    const auto i = parse_u32(tok[0], line_no);
    const auto j = parse_u32(tok[1], line_no);
    if (inst->relation(i, j) != Relation::indifferent) {
      throw InvalidInstance(fmt::format("line {}: pair ({}, {}) listed twice", line_no, i, j));
    }
    inst->set_relation(i, j, tok[2] == "F" ? Relation::friends : Relation::enemies);
  }
  if (!inst) throw InvalidInstance("missing 'seating <M> <N>' header");
  return *std::move(inst);
}

std::string format_chart(const SeatingChart& chart) {
  std::string out;
  for (std::uint32_t i = 1; i <= chart.num_guests(); ++i) {
    out += fmt::format("guest {} table {}\n", i, chart.table_of(i));
  }
  return out;
}

}  // namespace cnfsat
