#include "linca/zmod.hpp"

#include <string>

namespace linca {

Modulus::Modulus(std::int64_t n) : n_(n) {
  if (n < 2 || n > kMax) {
    throw Error("modulus must lie in [2, 2^31-1], got " + std::to_string(n));
  }
}

Residue::Residue(Modulus modulus, std::int64_t value)
    : modulus_(modulus), value_(value) {
  if (value < 0 || value >= modulus.value()) {
    throw Error("residue " + std::to_string(value) + " outside [0, " +
                std::to_string(modulus.value()) + ")");
  }
}

Residue Residue::reduce(Modulus modulus, std::int64_t value) noexcept {
  return Residue(modulus, floor_mod(value, modulus.value()), Reduced{});
}

namespace {

void require_same_modulus(const Residue& lhs, const Residue& rhs) {
  if (lhs.modulus() != rhs.modulus()) {
    throw Error("residues belong to different moduli");
  }
}

}  // namespace

Residue operator+(Residue lhs, Residue rhs) {
  require_same_modulus(lhs, rhs);
  return Residue::reduce(lhs.modulus_, lhs.value_ + rhs.value_);
}

Residue operator*(Residue lhs, Residue rhs) {
  require_same_modulus(lhs, rhs);
  return Residue::reduce(lhs.modulus_, lhs.value_ * rhs.value_);
}

std::uint64_t gcd(std::uint64_t x, std::uint64_t y) {
  if (x == 0 && y == 0) {
    throw Error("gcd(0, 0) is undefined");
  }
  while (y != 0) {
    const std::uint64_t r = x % y;
    x = y;
    y = r;
  }
  return x;
}

bool is_unit(Residue k) {
  return k.value() != 0 &&
         gcd(static_cast<std::uint64_t>(k.value()),
             static_cast<std::uint64_t>(k.modulus().value())) == 1;
}

std::vector<Residue> units(Modulus n) {
  std::vector<Residue> out;
  for (std::int64_t b = 1; b < n.value(); ++b) {
    if (gcd(static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(n.value())) == 1) {
      out.emplace_back(n, b);
    }
  }
  return out;
}

Residue inverse(Residue k) {
  const std::int64_t n = k.modulus().value();
  // Invariant: old_s * k == old_r (mod n).
  std::int64_t old_r = k.value(), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw Error("no inverse: seed " + std::to_string(k.value()) +
                " not coprime to modulus " + std::to_string(n));
  }
  return Residue::reduce(k.modulus(), old_s);
}

Residue ScaleMap::operator()(Residue b) const { return k_ * b; }

ScaleMap scale_map(Residue k) { return ScaleMap(k); }

namespace {

Modulus quotient_target(Modulus n, std::int64_t d) {
  if (d < 1 || n.value() % d != 0) {
    throw Error(std::to_string(d) + " is not a divisor of " + std::to_string(n.value()));
  }
  if (d == n.value()) {
    throw Error("quotient by the full modulus leaves the trivial group");
  }
  return Modulus(n.value() / d);
}

}  // namespace

QuotientMap::QuotientMap(Modulus n, std::int64_t d)
    : source_(n), d_(d), target_(quotient_target(n, d)) {}

bool QuotientMap::in_domain(Residue b) const noexcept {
  return b.modulus() == source_ && b.value() % d_ == 0;
}

Residue QuotientMap::operator()(Residue b) const {
  if (!in_domain(b)) {
    throw Error("state outside subgroup: " + std::to_string(b.value()) +
                " is not a multiple of " + std::to_string(d_) + " mod " +
                std::to_string(source_.value()));
  }
  return Residue(target_, b.value() / d_);
}

QuotientMap quotient_map(Modulus n, std::int64_t d) { return QuotientMap(n, d); }

}  // namespace linca
