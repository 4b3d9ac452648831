#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace cnfsat {

/// Seeded pseudo-random stream shared by every randomized component.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions are implementation-defined, so the
/// reductions below are written out explicitly; together this makes every
/// random choice reproducible across compilers and platforms.
///
///  - coin():          top bit of one draw.
///  - uniform_real():  top 53 bits of one draw scaled to [0, 1).
///  - uniform_index(n): one or more draws, rejection-sampled so that
///                      `draw % n` is unbiased; no draw when n == 1.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  bool coin() { return (next() >> 63) != 0; }
  double uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  std::size_t uniform_index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; a bijective 64-bit mixing function.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Fresh seed from system entropy, for commands run without --seed.
[[nodiscard]] std::uint64_t entropy_seed();

}  // namespace cnfsat
