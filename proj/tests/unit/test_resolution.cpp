#include <doctest.h>

#include <algorithm>
#include <set>

#include "cnfsat/oracle.hpp"
#include "cnfsat/resolution.hpp"
#include "support/generators.hpp"

using namespace cnfsat;

namespace {
const Literal pA = Literal::positive(Variable{1});
const Literal nA = Literal::negative(Variable{1});
const Literal pB = Literal::positive(Variable{2});
const Literal nB = Literal::negative(Variable{2});
const Literal pC = Literal::positive(Variable{3});

// Literal transcription of the saturation loop: every round re-resolves
// every unordered pair of the whole set.
struct Reference {
  Verdict verdict;
  std::size_t rounds = 0;
  std::set<Clause> clauses;
};

Reference reference_saturation(const Formula& f, bool discard) {
  Reference r;
  r.clauses.insert(f.clauses().begin(), f.clauses().end());
  if (r.clauses.count(Clause{})) {
    r.verdict = Unsatisfiable{};
    return r;
  }
  for (;;) {
    ++r.rounds;
    std::set<Clause> fresh;
    const std::vector<Clause> current(r.clauses.begin(), r.clauses.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        for (auto& res : pl_resolve(current[i], current[j], discard)) {
          if (res.empty()) {
            r.verdict = Unsatisfiable{};
            return r;
          }
          fresh.insert(std::move(res));
        }
      }
    }
    if (std::includes(r.clauses.begin(), r.clauses.end(), fresh.begin(), fresh.end())) {
      r.verdict = Satisfiable{};
      return r;
    }
    r.clauses.insert(fresh.begin(), fresh.end());
  }
}
}  // namespace

TEST_CASE("pl_resolve examples") {
  const auto r1 = pl_resolve(Clause{pA, pB}, Clause{nA, pC});
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == Clause{pB, pC});

  const auto r2 = pl_resolve(Clause{pA}, Clause{nA});
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].empty());

  // Resolving on A gives {B, -B}; on B gives {A, -A}. Both are tautologies.
  CHECK(pl_resolve(Clause{pA, pB}, Clause{nA, nB}).empty());
  const auto kept = pl_resolve(Clause{pA, pB}, Clause{nA, nB}, false);
  REQUIRE(kept.size() == 2);
  CHECK(kept[0] == Clause{pA, nA});
  CHECK(kept[1] == Clause{pB, nB});

  CHECK(pl_resolve(Clause{pA, pB}, Clause{pA, pC}).empty());
}

TEST_CASE("pl_resolve is symmetric") {
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = testing::random_formula(rng, {5, 2, 4});
    if (f.size() < 2) continue;
    CHECK(pl_resolve(f.clauses()[0], f.clauses()[1]) ==
          pl_resolve(f.clauses()[1], f.clauses()[0]));
  }
}

TEST_CASE("pl_resolution examples") {
  const auto contra = pl_resolution(Formula(1, {Clause{pA}, Clause{nA}}));
  CHECK(is_unsat(contra.verdict));
  CHECK(contra.stats.rounds == 1);
  CHECK(contra.stats.empty_clause);

  const auto single = pl_resolution(Formula(2, {Clause{pA, pB}}));
  CHECK(is_sat(single.verdict));
  CHECK(model_of(single.verdict) == nullptr);
  CHECK(single.stats.rounds == 1);
  CHECK(single.stats.clauses_final == 1);

  CHECK(is_sat(pl_resolution(Formula{}).verdict));
}

TEST_CASE("empty input clause is unsatisfiable without any round") {
  const auto r = pl_resolution(Formula(1, {Clause{pA}, Clause{}}));
  CHECK(is_unsat(r.verdict));
  CHECK(r.stats.rounds == 0);
}

TEST_CASE("tautological input clauses keep the untouched literal") {
  // {A, -A} resolved with {-A} on A leaves {-A}, not the empty clause.
  const auto r = pl_resolution(Formula(1, {Clause{pA, nA}, Clause{nA}}));
  CHECK(is_sat(r.verdict));
  const auto both = pl_resolve(Clause{pA, nA}, Clause{pA, nA}, false);
  REQUIRE(both.size() == 1);
  CHECK(both[0] == Clause{pA, nA});
}

TEST_CASE("matches the literal pseudocode transcription") {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = testing::random_formula(rng, {5, 10, 3});
    for (const bool discard : {true, false}) {
      const auto ref = reference_saturation(f, discard);
      const auto got = pl_resolution(f, {}, {discard, true});
      CHECK(got.verdict.index() == ref.verdict.index());
      CHECK(got.stats.rounds == ref.rounds);
      if (is_sat(ref.verdict)) {
        const std::set<Clause> final_set(got.clauses.begin(), got.clauses.end());
        CHECK(final_set == ref.clauses);
        CHECK(final_set.size() == got.clauses.size());
      }
    }
  }
}

TEST_CASE("verdicts match the truth-table oracle with and without tautology discard") {
  Rng rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const bool discard = trial % 2 == 0;
    // Keeping tautologies lets the closure reach 3^n clauses; stay small there.
    const auto f = testing::random_formula(rng, {discard ? 8u : 6u, 30, 3});
    const bool sat = is_sat(brute_force_solve(f));
    {
      const auto r = pl_resolution(f, {}, {discard, false});
      REQUIRE_FALSE(is_unknown(r.verdict));
      CHECK(is_sat(r.verdict) == sat);
      CHECK(r.stats.empty_clause == !sat);
    }
  }
}

TEST_CASE("clause set only grows and keeps the input") {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = testing::random_formula(rng, {6, 15, 3});
    const auto r = pl_resolution(f, {}, {true, true});
    const std::set<Clause> final_set(r.clauses.begin(), r.clauses.end());
    for (const auto& c : f.clauses()) CHECK(final_set.count(c) == 1);
    CHECK(r.stats.clauses_final == r.clauses.size());
    // Recorded in insertion order: the input set comes first.
    const std::set<Clause> input(f.clauses().begin(), f.clauses().end());
    const std::set<Clause> prefix(r.clauses.begin(), r.clauses.begin() + input.size());
    CHECK(prefix == input);
  }
}

namespace {
// Pigeonhole: `pigeons` pigeons into `pigeons - 1` holes, unsatisfiable.
Formula pigeonhole(int pigeons) {
  const int holes = pigeons - 1;
  auto var = [holes](int p, int h) {
    return Variable{static_cast<std::uint32_t>(p * holes + h + 1)};
  };
  std::vector<Clause> clauses;
  for (int p = 0; p < pigeons; ++p) {
    std::vector<Literal> some_hole;
    for (int h = 0; h < holes; ++h) some_hole.push_back(Literal::positive(var(p, h)));
    clauses.emplace_back(std::move(some_hole));
  }
  for (int h = 0; h < holes; ++h) {
    for (int p = 0; p < pigeons; ++p) {
      for (int q = p + 1; q < pigeons; ++q) {
        clauses.push_back(Clause{Literal::negative(var(p, h)), Literal::negative(var(q, h))});
      }
    }
  }
  return Formula(static_cast<std::size_t>(pigeons * holes), clauses);
}
}  // namespace

TEST_CASE("resource limits yield Unknown, never a wrong verdict") {
  const Formula php = pigeonhole(4);

  ResolutionLimits tight;
  tight.max_clauses = 60;
  const auto r1 = pl_resolution(php, tight);
  CHECK(is_unknown(r1.verdict));
  CHECK(r1.stats.clauses_final <= 60);

  ResolutionLimits one_round;
  one_round.max_rounds = 1;
  const auto r2 = pl_resolution(php, one_round);
  CHECK(is_unknown(r2.verdict));
  CHECK(r2.stats.rounds == 1);

  ResolutionLimits no_time;
  no_time.time_budget = std::chrono::duration<double>(1e-9);
  no_time.max_clauses = 10'000'000;
  const auto r3 = pl_resolution(php, no_time);
  CHECK_FALSE(is_sat(r3.verdict));

  CHECK(is_unsat(pl_resolution(pigeonhole(3)).verdict));
}

TEST_CASE("formulas wider than one mask word") {
  // Chain x1 -> x2 -> ... -> x130 with x1 and not x130.
  std::vector<Clause> clauses{Clause{Literal::positive(Variable{1})}};
  for (std::uint32_t v = 1; v < 130; ++v) {
    clauses.push_back(Clause{Literal::negative(Variable{v}), Literal::positive(Variable{v + 1})});
  }
  const Formula sat(130, clauses);
  CHECK(is_sat(pl_resolution(sat).verdict));
  clauses.push_back(Clause{Literal::negative(Variable{130})});
  CHECK(is_unsat(pl_resolution(Formula(130, clauses)).verdict));
}
