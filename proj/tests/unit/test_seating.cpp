#include <doctest.h>

#include "cnfsat/oracle.hpp"
#include "cnfsat/seating.hpp"
#include "support/generators.hpp"

using namespace cnfsat;

namespace {
// Number of charts meeting every constraint, by direct enumeration.
std::uint64_t count_valid_charts(const SeatingInstance& inst) {
  const auto m = inst.num_guests();
  const auto n = inst.num_tables();
  std::vector<std::uint32_t> table(m, 1);
  std::uint64_t valid = 0;
  for (;;) {
    valid += chart_satisfies(SeatingChart(table), inst) ? 1 : 0;
    std::size_t k = 0;
    while (k < m && table[k] == n) table[k++] = 1;
    if (k == m) return valid;
    ++table[k];
  }
}
}  // namespace

TEST_CASE("variable numbering") {
  const EncodingMap map(3, 2);
  CHECK(map.num_vars() == 6);
  CHECK(map.var_of(1, 1) == Variable{1});
  CHECK(map.var_of(1, 2) == Variable{2});
  CHECK(map.var_of(2, 1) == Variable{3});
  CHECK(map.var_of(3, 2) == Variable{6});
  for (std::uint32_t v = 1; v <= 6; ++v) {
    const auto [g, t] = map.seat_of(Variable{v});
    CHECK(map.var_of(g, t) == Variable{v});
  }
}

TEST_CASE("single guest, single table") {
  const auto enc = encode(SeatingInstance(1, 1));
  REQUIRE(enc.formula.size() == 1);
  CHECK(enc.formula.clauses()[0] == Clause{Literal::positive(Variable{1})});
}

TEST_CASE("two enemies and one table are unsatisfiable") {
  SeatingInstance inst(2, 1);
  inst.set_relation(1, 2, Relation::enemies);
  const auto enc = encode(inst);
  CHECK(enc.formula.size() == 3);
  CHECK(is_unsat(brute_force_solve(enc.formula)));
}

TEST_CASE("friends share a table") {
  SeatingInstance inst(3, 2);
  inst.set_relation(1, 2, Relation::friends);
  const auto enc = encode(inst);
  // 3 at-least-one + 3 at-most-one + 2 * 1 * 2 friend clauses.
  CHECK(enc.formula.size() == 10);
  const auto v = brute_force_solve(enc.formula);
  REQUIRE(model_of(v) != nullptr);
  const auto chart = decode(*model_of(v), enc.map);
  CHECK(chart.table_of(1) == chart.table_of(2));
}

TEST_CASE("clause count formula") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::random_instance(rng, 8, 5);
    const std::size_t m = inst.num_guests();
    const std::size_t n = inst.num_tables();
    const std::size_t expected = m + m * n * (n - 1) / 2 + 2 * inst.count(Relation::friends) * n +
                                 inst.count(Relation::enemies) * n;
    CHECK(encoded_clause_count(inst) == expected);
    CHECK(encode(inst).formula.size() == expected);
    CHECK(encode(inst).formula.num_vars() == m * n);
  }
}

TEST_CASE("relations are symmetric and counted once") {
  SeatingInstance inst(4, 2);
  inst.set_relation(3, 1, Relation::enemies);
  CHECK(inst.relation(1, 3) == Relation::enemies);
  CHECK(inst.relation(3, 1) == Relation::enemies);
  CHECK(inst.num_pairs() == 6);
  REQUIRE(inst.pairs(Relation::enemies).size() == 1);
  CHECK(inst.pairs(Relation::enemies)[0] == GuestPair{1, 3});
  CHECK(inst.count(Relation::indifferent) == 5);
  CHECK_THROWS_AS(inst.set_relation(2, 2, Relation::friends), InvalidInstance);
  CHECK_THROWS_AS(inst.set_relation(1, 5, Relation::friends), InvalidInstance);
  CHECK_THROWS_AS(SeatingInstance(0, 2), InvalidInstance);
  CHECK_THROWS_AS(SeatingInstance(2, 0), InvalidInstance);
}

TEST_CASE("generator") {
  CHECK(generate_instance(10, 2, 0.1, 0.2, 5) == generate_instance(10, 2, 0.1, 0.2, 5));
  CHECK_FALSE(generate_instance(10, 2, 0.1, 0.2, 5) == generate_instance(10, 2, 0.1, 0.2, 6));
  CHECK(generate_instance(10, 2, 0.0, 0.3, 1).count(Relation::friends) == 0);
  CHECK(generate_instance(10, 2, 1.0, 0.0, 1).count(Relation::friends) == 45);
  CHECK(generate_instance(10, 2, 0.0, 1.0, 1).count(Relation::enemies) == 45);
  CHECK(generate_instance(10, 2, 0.0, 0.0, 1).count(Relation::indifferent) == 45);
  CHECK_THROWS_AS((void)generate_instance(4, 2, 0.6, 0.5, 1), InvalidProbability);
  CHECK_THROWS_AS((void)generate_instance(4, 2, -0.1, 0.5, 1), InvalidProbability);

  // Frequencies over many pairs.
  const auto big = generate_instance(200, 2, 0.25, 0.5, 9);
  const double pairs = static_cast<double>(big.num_pairs());
  CHECK(big.count(Relation::friends) / pairs == doctest::Approx(0.25).epsilon(0.05));
  CHECK(big.count(Relation::enemies) / pairs == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("decode") {
  const EncodingMap map(2, 2);
  CHECK(decode(Model(std::vector<bool>{true, false, false, true}), map) == SeatingChart({1, 2}));
  CHECK_THROWS_AS((void)decode(Model(std::vector<bool>{true, true, false, true}), map), NotAFunction);
  CHECK_THROWS_AS((void)decode(Model(std::vector<bool>{false, false, false, true}), map), NotAFunction);

  const SeatingChart chart({2, 1, 2});
  const EncodingMap map3(3, 2);
  CHECK(decode(chart_to_model(chart, map3), map3) == chart);
}

TEST_CASE("chart_satisfies") {
  SeatingInstance inst(3, 2);
  inst.set_relation(1, 2, Relation::friends);
  inst.set_relation(2, 3, Relation::enemies);
  CHECK(chart_satisfies(SeatingChart({1, 1, 2}), inst));
  CHECK_FALSE(chart_satisfies(SeatingChart({1, 2, 2}), inst));
  CHECK_FALSE(chart_satisfies(SeatingChart({2, 2, 2}), inst));
}

TEST_CASE("instance text round trip") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = testing::random_instance(rng, 9, 4);
    CHECK(parse_instance(format_instance(inst)) == inst);
  }
  const auto parsed = parse_instance("# comment\nseating 3 2\n\n1 3 E\n2 3 F\n");
  CHECK(parsed.relation(1, 3) == Relation::enemies);
  CHECK(parsed.relation(2, 3) == Relation::friends);
  CHECK(parsed.relation(1, 2) == Relation::indifferent);
  CHECK_THROWS_AS((void)parse_instance("1 2 E\n"), InvalidInstance);
  CHECK_THROWS_AS((void)parse_instance("seating 2 2\n1 2 X\n"), InvalidInstance);
  CHECK_THROWS_AS((void)parse_instance("seating 2 2\n1 3 E\n"), InvalidInstance);
}

TEST_CASE("format_chart") {
  CHECK(format_chart(SeatingChart({2, 1})) == "guest 1 table 2\nguest 2 table 1\n");
}

TEST_CASE("encoding models correspond one-to-one with valid charts") {
  Rng rng(57);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = testing::random_instance(rng, 5, 3);
    const auto enc = encode(inst);
    CHECK(count_models(enc.formula) == count_valid_charts(inst));
    const auto v = brute_force_solve(enc.formula);
    if (const Model* m = model_of(v)) {
      CHECK(chart_satisfies(decode(*m, enc.map), inst));
    }
  }
}
