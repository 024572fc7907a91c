#include "linca/rule.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <map>

namespace linca {

TransitionRule TransitionRule::make(int dimension, std::vector<RuleTerm> terms) {
  if (dimension < kMinDimension || dimension > kMaxDimension) {
    throw Error("dimension must lie in [1, 3], got " + std::to_string(dimension));
  }
  if (terms.empty()) {
    throw Error("rule has no terms");
  }

  std::map<std::vector<std::int64_t>, std::int64_t> merged;
  for (auto& term : terms) {
    if (static_cast<int>(term.offset.size()) != dimension) {
      throw Error("offset arity " + std::to_string(term.offset.size()) +
                  " does not match dimension " + std::to_string(dimension));
    }
    auto& c = merged[term.offset];
    if (__builtin_add_overflow(c, term.coefficient, &c)) {
      throw Error("coefficient overflow while merging duplicate offsets");
    }
  }

  std::vector<RuleTerm> canonical;
  canonical.reserve(merged.size());
  bool all_zero = true;
  for (auto& [offset, coefficient] : merged) {
    all_zero = all_zero && coefficient == 0;
    canonical.push_back({coefficient, offset});
  }
  if (all_zero) {
    throw Error("null rule: every coefficient is zero");
  }
  return TransitionRule(dimension, std::move(canonical));
}

namespace {

class RuleParser {
 public:
  explicit RuleParser(std::string_view text) : text_(text) {}

  std::vector<RuleTerm> parse() {
    std::vector<RuleTerm> terms;
    skip_space();
    if (at_end()) {
      throw ParseError("empty rule", pos_);
    }
    terms.push_back(term());
    while (consume(';')) {
      terms.push_back(term());
    }
    skip_space();
    if (!at_end()) {
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return terms;
  }

 private:
  RuleTerm term() {
    RuleTerm t;
    t.coefficient = integer();
    expect('@');
    expect('(');
    t.offset.push_back(integer());
    while (consume(',')) {
      t.offset.push_back(integer());
    }
    expect(')');
    return t;
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    if (!at_end() && text_[pos_] == '-') {
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == digits) {
      throw ParseError("expected integer", start);
    }
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) {
      throw ParseError("integer out of range", start);
    }
    return value;
  }

  void expect(char c) {
    if (!consume(c)) {
      skip_space();
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  bool consume(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TransitionRule parse_rule(std::string_view text, int dimension) {
  return TransitionRule::make(dimension, RuleParser(text).parse());
}

std::string format_rule(const TransitionRule& rule) {
  std::string out;
  for (const auto& term : rule.terms()) {
    if (!out.empty()) {
      out += ';';
    }
    out += std::to_string(term.coefficient);
    out += "@(";
    for (std::size_t k = 0; k < term.offset.size(); ++k) {
      if (k != 0) {
        out += ',';
      }
      out += std::to_string(term.offset[k]);
    }
    out += ')';
  }
  return out;
}

std::int64_t rule_radius(const TransitionRule& rule) {
  std::int64_t radius = 0;
  for (const auto& term : rule.terms()) {
    for (const std::int64_t v : term.offset) {
      if (v == std::numeric_limits<std::int64_t>::min()) {
        throw Error("offset magnitude too large");
      }
      radius = std::max(radius, v < 0 ? -v : v);
    }
  }
  return radius;
}

TransitionRule rule90_analog() { return TransitionRule::make(1, {{1, {-1}}, {1, {1}}}); }

}  // namespace linca
