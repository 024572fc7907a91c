#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "linca/engine.hpp"
#include "linca/rule.hpp"

namespace linca::testing {

struct FixtureRule {
  std::string text;
  int dimension;
};

/// The rule family exercised by the acceptance criteria.
inline const std::vector<FixtureRule>& fixture_rules() {
  static const std::vector<FixtureRule> rules = {
      {"1@(-1);1@(1)", 1},
      {"1@(-1);1@(0);1@(1)", 1},
      {"2@(-1);1@(1)", 1},
      {"1@(-2);1@(2)", 1},
      {"1@(-1);2@(0);3@(1)", 1},
      {"1@(-1,0);1@(1,0);1@(0,-1);1@(0,1)", 2},
  };
  return rules;
}

inline std::vector<FixtureRule> fixture_rules_1d() {
  std::vector<FixtureRule> out;
  for (const auto& r : fixture_rules()) {
    if (r.dimension == 1) {
      out.push_back(r);
    }
  }
  return out;
}

inline Site site1(std::int64_t i) { return Site{i, 0, 0}; }

/// Random configuration with support inside [-radius, radius]^D.
inline Configuration random_configuration(std::mt19937_64& rng, Modulus n, int dimension,
                                          std::int64_t radius) {
  Box box = Box::cube(dimension, radius);
  std::uniform_int_distribution<std::int64_t> shift(-2, 2);
  for (int a = 0; a < dimension; ++a) {
    const std::int64_t s = shift(rng);
    box.lo[a] += s;
    box.hi[a] += s;
  }
  Configuration c(n, box);
  std::uniform_int_distribution<std::int64_t> state(0, n.value() - 1);
  for_each_site(box, [&](const Site& s) { c.set(s, state(rng)); });
  return c;
}

/// Random 1-D rule with small offsets and signed coefficients.
inline TransitionRule random_rule(std::mt19937_64& rng, int dimension) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<std::int64_t> coef(-7, 7);
  std::uniform_int_distribution<std::int64_t> off(-2, 2);
  while (true) {
    std::vector<RuleTerm> terms(static_cast<std::size_t>(count(rng)));
    for (auto& t : terms) {
      t.coefficient = coef(rng);
      for (int a = 0; a < dimension; ++a) {
        t.offset.push_back(off(rng));
      }
    }
    try {
      return TransitionRule::make(dimension, std::move(terms));
    } catch (const Error&) {
      // all coefficients cancelled; draw again
    }
  }
}

}  // namespace linca::testing
