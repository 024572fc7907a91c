#pragma once

// Finite-support configurations over Z^D and their exact evolution under a
// linear transition rule.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "linca/rule.hpp"
#include "linca/zmod.hpp"

namespace linca {

/// A site of Z^D. Axes at and beyond the dimension are ignored and kept 0.
using Site = std::array<std::int64_t, kMaxDimension>;

/// Axis-aligned box of sites with inclusive bounds.
struct Box {
  int dimension = 1;
  Site lo{};
  Site hi{};

  /// [-radius, radius]^D.
  static Box cube(int dimension, std::int64_t radius);

  std::int64_t extent(int axis) const { return hi[axis] - lo[axis] + 1; }
  std::size_t volume() const;
  bool contains(const Site& site) const;
  Box expanded(std::int64_t by) const;
  Box united(const Box& other) const;

  friend bool operator==(const Box&, const Box&) = default;
};

/// Visits every site of `box` in lexicographic order (axis 0 slowest).
template <typename Visitor>
void for_each_site(const Box& box, Visitor&& visit) {
  Site s = box.lo;
  for (int a = box.dimension; a < kMaxDimension; ++a) {
    s[a] = 0;
  }
  if (box.volume() == 0) {
    return;
  }
  while (true) {
    visit(static_cast<const Site&>(s));
    int axis = box.dimension - 1;
    while (axis >= 0 && s[axis] == box.hi[axis]) {
      s[axis] = box.lo[axis];
      --axis;
    }
    if (axis < 0) {
      return;
    }
    ++s[axis];
  }
}

/// Dense array of states over a box; sites outside the box hold 0.
class Configuration {
 public:
  /// Zero configuration over `box`.
  Configuration(Modulus modulus, const Box& box);

  Modulus modulus() const noexcept { return modulus_; }
  int dimension() const noexcept { return box_.dimension; }
  const Box& box() const noexcept { return box_; }

  /// State at `site`, 0 when outside the box.
  std::int64_t at(const Site& site) const;

  /// Requires `site` inside the box; `value` is reduced mod n.
  void set(const Site& site, std::int64_t value);

  std::span<const std::uint32_t> cells() const noexcept { return cells_; }
  std::size_t index_of(const Site& site) const;

  bool is_zero() const;

  /// Equality as functions Z^D -> Z/nZ; boxes may differ.
  friend bool operator==(const Configuration& lhs, const Configuration& rhs);

 private:
  friend Configuration step(const Configuration&, const TransitionRule&);

  Modulus modulus_;
  Box box_;
  std::vector<std::uint32_t> cells_;
};

/// Cell-wise sum mod n over the union of both boxes.
Configuration add(const Configuration& lhs, const Configuration& rhs);

/// Cell-wise k * u mod n.
Configuration scale(const Configuration& u, Residue k);

/// u_<a>: value a at the origin, 0 elsewhere. Rejects a = 0.
Configuration single_site_seed(Modulus n, int dimension, Residue a);

/// One application of T. The output box is the input box expanded by the
/// rule radius on every axis.
Configuration step(const Configuration& c, const TransitionRule& rule);

/// Rows T^0 u_<a> ... T^tmax u_<a>. Row t covers [-r t, r t]^D.
struct Pattern {
  Modulus modulus;
  TransitionRule rule;
  Residue seed;
  std::vector<Configuration> rows;

  int dimension() const noexcept { return rule.dimension(); }
  std::int64_t horizon() const noexcept { return static_cast<std::int64_t>(rows.size()) - 1; }
  std::int64_t at(std::int64_t t, const Site& site) const { return rows.at(t).at(site); }
};

/// Upper bound on the total number of stored cells of one pattern.
inline constexpr std::size_t kMaxPatternCells = std::size_t{1} << 26;

Pattern evolve(Modulus n, const TransitionRule& rule, Residue a, std::int64_t t_max);

/// States observed in a pattern, tagged with the horizon they were
/// collected over. A finite truncation of the full reachable set.
struct ReachableStates {
  std::vector<std::int64_t> states;  // ascending
  std::int64_t horizon = 0;
};

ReachableStates reachable_states(const Pattern& p);

}  // namespace linca
