#include <doctest.h>

#include <array>
#include <random>

#include "cnfsat/rng.hpp"

using cnfsat::Rng;

TEST_CASE("rng reproduces mt19937_64") {
  // The 10000th output of a default-seeded mt19937_64 is fixed by the standard.
  std::mt19937_64 ref;
  ref.discard(9999);
  CHECK(ref() == 9981545732273789042ULL);

  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("uniform_index stays in range and covers it") {
  Rng rng(1);
  std::array<int, 7> hits{};
  for (int i = 0; i < 7000; ++i) {
    const auto k = rng.uniform_index(7);
    REQUIRE(k < 7);
    ++hits[k];
  }
  for (const int h : hits) CHECK(h > 800);
}

TEST_CASE("uniform_index(1) consumes no randomness") {
  Rng a(9);
  Rng b(9);
  CHECK(a.uniform_index(1) == 0);
  CHECK(a.next() == b.next());
}

TEST_CASE("uniform_real lies in [0, 1)") {
  Rng rng(3);
  double sum = 0;
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform_real();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / 10000 == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("mix64 is not the identity and separates neighbours") {
  CHECK(cnfsat::mix64(0) != 0);
  CHECK(cnfsat::mix64(1) != cnfsat::mix64(2));
}
