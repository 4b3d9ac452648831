#include "cnfsat/resolution.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <unordered_set>

namespace cnfsat {

std::vector<Clause> pl_resolve(const Clause& ci, const Clause& cj, bool discard_tautologies) {
  std::set<Clause> out;
  for (const auto l : ci) {
    if (!cj.contains(negate(l))) continue;
    std::vector<Literal> lits;
    lits.reserve(ci.size() + cj.size());
    std::copy_if(ci.begin(), ci.end(), std::back_inserter(lits), [&](Literal x) { return x != l; });
    std::copy_if(cj.begin(), cj.end(), std::back_inserter(lits),
                 [&](Literal x) { return x != negate(l); });
    Clause r(std::move(lits));
    if (discard_tautologies && is_tautology(r)) continue;
    out.insert(std::move(r));
  }
  return {out.begin(), out.end()};
}

namespace {

using Clock = std::chrono::steady_clock;

// Clause store with each clause laid out as `words` positive-literal mask
// words followed by `words` negative-literal mask words. Clauses are only
// ever appended, so an index identifies a clause for the whole run.
class ClauseArena {
 public:
  explicit ClauseArena(std::size_t num_vars)
      : words_(std::max<std::size_t>(1, (num_vars + 63) / 64)),
        index_(64, Hash{this}, Equal{this}) {}

  [[nodiscard]] std::size_t words() const { return words_; }
  [[nodiscard]] std::size_t size() const { return size_; }

  [[nodiscard]] const std::uint64_t* pos(std::size_t c) const { return &bits_[c * 2 * words_]; }
  [[nodiscard]] const std::uint64_t* neg(std::size_t c) const {
    return &bits_[c * 2 * words_ + words_];
  }

  /// Scratch slot for building a candidate clause at the end of storage.
  std::uint64_t* stage() {
    bits_.resize((size_ + 1) * 2 * words_);
    return &bits_[size_ * 2 * words_];
  }
  [[nodiscard]] bool staged_is_known() const { return index_.contains(size_); }
  /// Keeps the staged clause if it is new; returns whether it was added.
  bool commit_staged() {
    if (!index_.insert(size_).second) {
      discard_staged();
      return false;
    }
    ++size_;
    return true;
  }
  void discard_staged() { bits_.resize(size_ * 2 * words_); }

  [[nodiscard]] Clause to_clause(std::size_t c) const {
    std::vector<Literal> lits;
    for (std::size_t w = 0; w < words_; ++w) {
      for (int side = 0; side < 2; ++side) {
        std::uint64_t m = side == 0 ? pos(c)[w] : neg(c)[w];
        while (m != 0) {
          const auto bit = static_cast<std::uint32_t>(std::countr_zero(m));
          m &= m - 1;
          const Variable v{static_cast<std::uint32_t>(w * 64 + bit + 1)};
          lits.push_back(side == 0 ? Literal::positive(v) : Literal::negative(v));
        }
      }
    }
    return Clause(std::move(lits));
  }

 private:
  struct Hash {
    const ClauseArena* arena;
    std::size_t operator()(std::size_t c) const noexcept {
      const std::uint64_t* p = &arena->bits_[c * 2 * arena->words_];
      std::uint64_t h = 0x9e3779b97f4a7c15ULL;
      for (std::size_t k = 0; k < 2 * arena->words_; ++k) {
        h ^= p[k] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
      }
      return static_cast<std::size_t>(h ^ (h >> 32));
    }
  };
  struct Equal {
    const ClauseArena* arena;
    bool operator()(std::size_t a, std::size_t b) const noexcept {
      const auto n = 2 * arena->words_;
      const std::uint64_t* pa = &arena->bits_[a * n];
      const std::uint64_t* pb = &arena->bits_[b * n];
      return std::equal(pa, pa + n, pb);
    }
  };

  std::size_t words_;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<std::size_t, Hash, Equal> index_;
};

enum class Outcome { running, unsat, limit };

class Saturator {
 public:
  Saturator(const Formula& f, const ResolutionLimits& limits, const ResolutionOptions& options)
      : limits_(limits), options_(options), arena_(f.num_vars()), start_(Clock::now()) {
    for (const auto& c : f.clauses()) {
      if (c.empty()) stats_.empty_clause = true;
      auto* slot = arena_.stage();
      std::fill(slot, slot + 2 * arena_.words(), 0);
      for (const auto l : c) {
        const std::size_t i = l.var().index();
        slot[(l.is_positive() ? 0 : arena_.words()) + i / 64] |= std::uint64_t{1} << (i % 64);
      }
      arena_.commit_staged();
    }
  }

  ResolutionResult run() {
    Verdict verdict = solve();
    stats_.clauses_final = arena_.size();
    stats_.elapsed = Clock::now() - start_;
    ResolutionResult result{std::move(verdict), stats_, {}};
    if (options_.record_clauses) {
      result.clauses.reserve(arena_.size());
      for (std::size_t c = 0; c < arena_.size(); ++c) result.clauses.push_back(arena_.to_clause(c));
    }
    return result;
  }

 private:
  Verdict solve() {
    if (stats_.empty_clause) return Unsatisfiable{};
    if (arena_.size() > limits_.max_clauses) return Unknown{UnknownReason::resource_limit_exceeded};

    std::size_t resolved_upto = 0;  // all pairs inside [0, resolved_upto) are done
    for (;;) {
      if (stats_.rounds >= limits_.max_rounds) return Unknown{UnknownReason::resource_limit_exceeded};
      ++stats_.rounds;
      const std::size_t round_end = arena_.size();
      for (std::size_t j = resolved_upto; j < round_end; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          switch (resolve_pair(i, j)) {
            case Outcome::unsat:
              return Unsatisfiable{};
            case Outcome::limit:
              return Unknown{UnknownReason::resource_limit_exceeded};
            case Outcome::running:
              break;
          }
        }
      }
      resolved_upto = round_end;
      if (arena_.size() == round_end) return Satisfiable{};
    }
  }

  Outcome resolve_pair(std::size_t i, std::size_t j) {
    if ((++pairs_ & 0xFFF) == 0 && Clock::now() - start_ > limits_.time_budget) {
      return Outcome::limit;
    }
    const std::size_t words = arena_.words();
    const std::uint64_t* pi = arena_.pos(i);
    const std::uint64_t* ni = arena_.neg(i);
    const std::uint64_t* pj = arena_.pos(j);
    const std::uint64_t* nj = arena_.neg(j);

    // Clashing literal pairs: i has +v and j has -v, or i has -v and j has +v.
    std::size_t clashes = 0;
    for (std::size_t w = 0; w < words; ++w) {
      clashes += static_cast<std::size_t>(std::popcount(pi[w] & nj[w]) +
                                          std::popcount(ni[w] & pj[w]));
    }
    if (clashes == 0) return Outcome::running;
    // With two or more clashing pairs every resolvent keeps a clash.
    if (clashes > 1 && options_.discard_tautologies) return Outcome::running;

    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t clash = dir == 0 ? (arena_.pos(i)[w] & arena_.neg(j)[w])
                                       : (arena_.neg(i)[w] & arena_.pos(j)[w]);
        while (clash != 0) {
          const std::uint64_t bit = clash & (~clash + 1);
          clash &= clash - 1;
          const auto outcome = add_resolvent(i, j, dir == 0, w, bit);
          if (outcome != Outcome::running) return outcome;
        }
      }
    }
    return Outcome::running;
  }

  // Resolvent of i and j on one variable: i loses the literal (positive when
  // i_positive), j loses its complement.
  Outcome add_resolvent(std::size_t i, std::size_t j, bool i_positive, std::size_t w,
                        std::uint64_t bit) {
    const std::size_t words = arena_.words();
    // stage() may reallocate, so read operand pointers afterwards.
    std::uint64_t* r = arena_.stage();
    const std::uint64_t* a_pos = arena_.pos(i);
    const std::uint64_t* a_neg = arena_.neg(i);
    const std::uint64_t* b_pos = arena_.pos(j);
    const std::uint64_t* b_neg = arena_.neg(j);
    bool tautology = false;
    bool empty = true;
    for (std::size_t k = 0; k < words; ++k) {
      const std::uint64_t drop = k == w ? bit : 0;
      const std::uint64_t drop_pos_i = i_positive ? drop : 0;
      const std::uint64_t drop_neg_i = i_positive ? 0 : drop;
      const std::uint64_t p = (a_pos[k] & ~drop_pos_i) | (b_pos[k] & ~drop_neg_i);
      const std::uint64_t n = (a_neg[k] & ~drop_neg_i) | (b_neg[k] & ~drop_pos_i);
      r[k] = p;
      r[words + k] = n;
      tautology |= (p & n) != 0;
      empty &= (p | n) == 0;
    }
    if (tautology && options_.discard_tautologies) {
      arena_.discard_staged();
      return Outcome::running;
    }
    ++stats_.resolvents_generated;
    if (empty) {
      arena_.discard_staged();
      stats_.empty_clause = true;
      return Outcome::unsat;
    }
    if (arena_.size() >= limits_.max_clauses && !arena_.staged_is_known()) {
      arena_.discard_staged();
      return Outcome::limit;
    }
    arena_.commit_staged();
    return Outcome::running;
  }

  ResolutionLimits limits_;
  ResolutionOptions options_;
  ClauseArena arena_;
  Clock::time_point start_;
  ResolutionStats stats_;
  std::uint64_t pairs_ = 0;
};

}  // namespace

ResolutionResult pl_resolution(const Formula& f, const ResolutionLimits& limits,
                               const ResolutionOptions& options) {
  return Saturator(f, limits, options).run();
}

}  // namespace cnfsat
