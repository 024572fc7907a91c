#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "linca/error.hpp"

namespace linca {

inline constexpr int kMinDimension = 1;
inline constexpr int kMaxDimension = 3;

/// One summand c * u[i + v] of a linear rule. The coefficient is kept as a
/// plain integer and reduced only when the rule is applied, so the same rule
/// can be evaluated over different moduli.
struct RuleTerm {
  std::int64_t coefficient = 0;
  std::vector<std::int64_t> offset;

  friend bool operator==(const RuleTerm&, const RuleTerm&) = default;
};

/// (Tu)_i = sum_j c_j * u_{i + v_j}, in canonical form: offsets pairwise
/// distinct and sorted lexicographically.
class TransitionRule {
 public:
  /// Merges duplicate offsets by summing coefficients and sorts terms.
  /// Throws on empty term list, wrong offset arity, dimension outside
  /// [1, 3], or a rule whose coefficients all vanish.
  static TransitionRule make(int dimension, std::vector<RuleTerm> terms);

  int dimension() const noexcept { return dimension_; }
  const std::vector<RuleTerm>& terms() const noexcept { return terms_; }

  friend bool operator==(const TransitionRule&, const TransitionRule&) = default;

 private:
  TransitionRule(int dimension, std::vector<RuleTerm> terms)
      : dimension_(dimension), terms_(std::move(terms)) {}

  int dimension_;
  std::vector<RuleTerm> terms_;
};

/// Grammar: rule := term (';' term)*, term := int '@' '(' int (',' int)* ')',
/// int := ['-'] digit+. Whitespace is allowed between tokens.
TransitionRule parse_rule(std::string_view text, int dimension = 1);

/// Inverse of parse_rule for canonical rules, e.g. "1@(-1);1@(1)".
std::string format_rule(const TransitionRule& rule);

/// Largest infinity-norm over the term offsets.
std::int64_t rule_radius(const TransitionRule& rule);

/// (Tu)_i = u_{i-1} + u_{i+1}, the elementary rule-90 analog.
TransitionRule rule90_analog();

}  // namespace linca
