#pragma once

// Arithmetic on the residue ring Z/nZ.
//
// Residues are always stored reduced into [0, n). The modulus is capped at
// 2^31 - 1 so that the product of two residues fits in a signed 64-bit
// intermediate.

#include <compare>
#include <cstdint>
#include <vector>

#include "linca/error.hpp"

namespace linca {

/// Number of states n of a cellular automaton, 2 <= n <= 2^31 - 1.
class Modulus {
 public:
  static constexpr std::int64_t kMax = 2147483647;

  explicit Modulus(std::int64_t n);

  std::int64_t value() const noexcept { return n_; }

  friend auto operator<=>(const Modulus&, const Modulus&) = default;

 private:
  std::int64_t n_;
};

/// Floor-mod: the representative of x in [0, n).
constexpr std::int64_t floor_mod(std::int64_t x, std::int64_t n) noexcept {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

/// An element of Z/nZ.
class Residue {
 public:
  /// Requires 0 <= value < n.
  Residue(Modulus modulus, std::int64_t value);

  /// Reduces an arbitrary integer into [0, n).
  static Residue reduce(Modulus modulus, std::int64_t value) noexcept;

  std::int64_t value() const noexcept { return value_; }
  Modulus modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend Residue operator+(Residue lhs, Residue rhs);
  friend Residue operator*(Residue lhs, Residue rhs);
  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  struct Reduced {};
  Residue(Modulus modulus, std::int64_t value, Reduced) noexcept
      : modulus_(modulus), value_(value) {}

  Modulus modulus_;
  std::int64_t value_;
};

/// Greatest common divisor; gcd(x, 0) = x. Rejects (0, 0).
std::uint64_t gcd(std::uint64_t x, std::uint64_t y);

/// Residues in [1, n) coprime to n, ascending. These are exactly the
/// generators of the additive group Z/nZ.
std::vector<Residue> units(Modulus n);

bool is_unit(Residue k);

/// Multiplicative inverse by the extended Euclidean algorithm.
/// Throws if k is not a unit.
Residue inverse(Residue k);

/// b -> k*b mod n. An automorphism of Z/nZ when k is a unit; otherwise a
/// plain (non-injective) endomorphism.
class ScaleMap {
 public:
  explicit ScaleMap(Residue k) : k_(k) {}

  Residue operator()(Residue b) const;
  Residue multiplier() const noexcept { return k_; }

 private:
  Residue k_;
};

ScaleMap scale_map(Residue k);

/// The isomorphism dZ/nZ -> Z/(n/d)Z, b -> b/d. Defined only on residues
/// divisible by d.
class QuotientMap {
 public:
  QuotientMap(Modulus n, std::int64_t d);

  /// Throws on b not divisible by d ("state outside subgroup").
  Residue operator()(Residue b) const;

  bool in_domain(Residue b) const noexcept;
  Modulus source() const noexcept { return source_; }
  Modulus target() const noexcept { return target_; }
  std::int64_t divisor() const noexcept { return d_; }

 private:
  Modulus source_;
  std::int64_t d_;
  Modulus target_;
};

/// Requires d >= 1 dividing n. When d = n the target is the trivial group,
/// which is not a valid Modulus, so d must be a proper divisor.
QuotientMap quotient_map(Modulus n, std::int64_t d);

}  // namespace linca
