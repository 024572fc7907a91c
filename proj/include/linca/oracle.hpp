#pragma once

// Reference computations that share no evolution code with the engine.
// Used by the test suites and by `linca evolve --oracle`.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "linca/engine.hpp"
#include "linca/equiv.hpp"
#include "linca/rule.hpp"

namespace linca::oracle {

inline constexpr std::int64_t kMaxNaiveSteps = 20;
inline constexpr std::size_t kMaxSearchStates = 8;
inline constexpr std::int64_t kMaxBinomialRow = 64;

/// Top-down evaluation of (T^t u_<a>)_i by recursion on t, memoized over
/// (t, i). Keep one evaluator alive to amortize the cache across cells.
class NaiveEvaluator {
 public:
  NaiveEvaluator(std::int64_t n, TransitionRule rule, std::int64_t seed);

  /// Throws when t exceeds kMaxNaiveSteps.
  std::int64_t cell(std::int64_t t, const Site& site);

 private:
  std::int64_t eval(std::int64_t t, const Site& site);

  std::int64_t n_;
  TransitionRule rule_;
  std::int64_t seed_;
  std::map<std::pair<std::int64_t, Site>, std::int64_t> memo_;
};

std::int64_t naive_cell(std::int64_t n, const TransitionRule& rule, std::int64_t seed,
                        std::int64_t t, const Site& site);

/// Every bijection between the observed state sets of p and q (each taken
/// together with 0, which is fixed) under which p maps cell-wise onto q for
/// all t <= horizon, in lexicographic order of the image sequence. Empty
/// when the state sets differ in size. Throws when they exceed
/// kMaxSearchStates or the patterns are not comparable.
std::vector<StateMap> search_state_maps(const Pattern& p, const Pattern& q);

/// True when `constructed`, restricted to a witness's domain, equals that
/// witness.
bool is_witness(const std::vector<StateMap>& witnesses, const StateMap& constructed);

/// Row t of the 2-state rule-90 analog from the origin seed, over
/// i in [-t, t]: C(t, (t+i)/2) mod 2 when t+i is even, else 0.
std::vector<std::int64_t> binomial_parity_row(std::int64_t t);

/// First cell of `p` where the engine disagrees with the naive evaluator,
/// checking rows t <= min(horizon, kMaxNaiveSteps).
std::optional<Failure> cross_check(const Pattern& p);

}  // namespace linca::oracle
