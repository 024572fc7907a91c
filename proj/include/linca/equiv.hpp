#pragma once

// Explicit state maps between spatio-temporal patterns and their finite
// horizon verification.
//
// Two patterns S(n, a) and S(n', a') of the same rule are isomorphic when a
// bijection f between their state sets satisfies
//   f((T^t u_<a>)_i) = (T^t u_<a'>)_i   for every site i and time t.
// For unit seeds f is multiplication by a' a^-1 (the scaling law), and a
// non-unit seed a reduces through b -> b / gcd(n, a) to the modulus
// n / gcd(n, a).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linca/engine.hpp"
#include "linca/error.hpp"
#include "linca/rule.hpp"
#include "linca/zmod.hpp"

namespace linca {

/// Injective table Z/nZ ⊇ domain -> Z/n'Z fixing 0.
class StateMap {
 public:
  using Entry = std::pair<std::int64_t, std::int64_t>;

  /// Throws unless the table is injective, maps 0 to 0, has no repeated
  /// domain element, and all values lie in range.
  static StateMap make(Modulus source, Modulus target, std::vector<Entry> table);

  static StateMap identity(Modulus n);

  Modulus source() const noexcept { return source_; }
  Modulus target() const noexcept { return target_; }

  /// Entries sorted by source state.
  const std::vector<Entry>& table() const noexcept { return table_; }

  std::vector<std::int64_t> domain() const;

  /// Image of b, or nullopt when b is outside the domain.
  std::optional<std::int64_t> apply(std::int64_t b) const;

  /// The table read backwards.
  StateMap inverse() const;

  /// This map restricted to `states` (which must lie in the domain).
  StateMap restricted_to(const std::vector<std::int64_t>& states) const;

  /// "0->0 1->2 2->1"
  std::string to_string() const;

  friend bool operator==(const StateMap&, const StateMap&) = default;

 private:
  StateMap(Modulus source, Modulus target, std::vector<Entry> table)
      : source_(source), target_(target), table_(std::move(table)) {}

  Modulus source_;
  Modulus target_;
  std::vector<Entry> table_;
};

/// g after f: defined on those b whose f-image lies in g's domain.
StateMap compose(const StateMap& g, const StateMap& f);

/// Raised when two seeds fall into different gcd classes and no state map
/// between their patterns can be constructed.
class IncomparableSeeds : public Error {
 public:
  IncomparableSeeds(std::int64_t r_a, std::int64_t r_b)
      : Error("seeds lie in different canonical classes: r_a=" + std::to_string(r_a) +
              " r_b=" + std::to_string(r_b)),
        r_a_(r_a),
        r_b_(r_b) {}

  std::int64_t r_a() const noexcept { return r_a_; }
  std::int64_t r_b() const noexcept { return r_b_; }

 private:
  std::int64_t r_a_;
  std::int64_t r_b_;
};

/// b -> (a' a^-1) b on all of Z/nZ. Both seeds must be units.
StateMap seed_map(Modulus n, Residue a, Residue a_hat);

struct Canonical {
  Modulus r;          // n / d
  std::int64_t d;     // gcd(n, a)
  StateMap map;       // dZ/nZ -> Z/rZ with a -> 1
};

/// Reduces seed a over n to seed 1 over r = n / gcd(n, a).
Canonical canonicalize(Modulus n, Residue a);

/// Map from the pattern of seed a to the pattern of seed b over the same
/// modulus: seed_map for unit seeds, otherwise the composition of
/// canonicalize(a) with the inverse of canonicalize(b). Throws
/// IncomparableSeeds when gcd(n, a) != gcd(n, b).
StateMap seed_pair_map(Modulus n, Residue a, Residue b);

struct PatternRef {
  std::int64_t n = 0;
  std::int64_t seed = 0;
};

struct Failure {
  std::int64_t t = 0;
  Site site{};
};

struct Certificate {
  PatternRef source;
  PatternRef target;
  TransitionRule rule;
  int dimension = 1;
  std::int64_t horizon = 0;
  StateMap map;
  std::optional<Failure> failure;  // empty when verified

  bool verified() const noexcept { return !failure.has_value(); }
};

/// Checks map(p cell) == q cell over the union light cone for every
/// t <= horizon. The first failure in (t, lexicographic site) order is
/// reported. Throws when p and q differ in rule, dimension or horizon, or
/// when the map's moduli do not match the patterns.
Certificate verify_isomorphism(const Pattern& p, const Pattern& q, const StateMap& f);

/// Line-oriented certificate text:
///   certificate v1
///   source n=<n> a=<a> rule="<rule>" tmax=<t>
///   target n=<n'> a=<a'>
///   map <b>-><f(b)>            (one per domain element, ascending b)
///   status verified | status falsified t=<t> i=<i0[,i1,...]>
std::string serialize(const Certificate& c);

struct SeedClass {
  Modulus r;
  std::int64_t d;
  std::vector<std::int64_t> seeds;
  std::vector<Certificate> certificates;  // one per seed, (n, a) -> (r, 1)

  bool verified() const;
};

/// Seeds 1..n-1 grouped by gcd(n, a), ascending in gcd, each with its
/// verified-or-falsified certificate against the canonical pattern.
std::vector<SeedClass> equivalence_classes(Modulus n, const TransitionRule& rule,
                                           std::int64_t t_max);

}  // namespace linca
