#include "linca/engine.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace linca {

Box Box::cube(int dimension, std::int64_t radius) {
  if (dimension < kMinDimension || dimension > kMaxDimension) {
    throw Error("dimension must lie in [1, 3], got " + std::to_string(dimension));
  }
  Box b;
  b.dimension = dimension;
  for (int a = 0; a < dimension; ++a) {
    b.lo[a] = -radius;
    b.hi[a] = radius;
  }
  return b;
}

std::size_t Box::volume() const {
  std::size_t v = 1;
  for (int a = 0; a < dimension; ++a) {
    if (hi[a] < lo[a]) {
      return 0;
    }
    v *= static_cast<std::size_t>(extent(a));
  }
  return v;
}

bool Box::contains(const Site& site) const {
  for (int a = 0; a < dimension; ++a) {
    if (site[a] < lo[a] || site[a] > hi[a]) {
      return false;
    }
  }
  return true;
}

Box Box::expanded(std::int64_t by) const {
  Box b = *this;
  for (int a = 0; a < dimension; ++a) {
    b.lo[a] -= by;
    b.hi[a] += by;
  }
  return b;
}

Box Box::united(const Box& other) const {
  if (other.dimension != dimension) {
    throw Error("cannot unite boxes of different dimension");
  }
  Box b = *this;
  for (int a = 0; a < dimension; ++a) {
    b.lo[a] = std::min(lo[a], other.lo[a]);
    b.hi[a] = std::max(hi[a], other.hi[a]);
  }
  return b;
}

namespace {

const Box& checked(const Box& box) {
  if (box.dimension < kMinDimension || box.dimension > kMaxDimension) {
    throw Error("dimension must lie in [1, 3]");
  }
  return box;
}

}  // namespace

Configuration::Configuration(Modulus modulus, const Box& box)
    : modulus_(modulus), box_(checked(box)), cells_(box.volume(), 0) {}

std::size_t Configuration::index_of(const Site& site) const {
  std::size_t idx = 0;
  for (int a = 0; a < box_.dimension; ++a) {
    idx = idx * static_cast<std::size_t>(box_.extent(a)) +
          static_cast<std::size_t>(site[a] - box_.lo[a]);
  }
  return idx;
}

std::int64_t Configuration::at(const Site& site) const {
  return box_.contains(site) ? cells_[index_of(site)] : 0;
}

void Configuration::set(const Site& site, std::int64_t value) {
  if (!box_.contains(site)) {
    throw Error("site outside configuration box");
  }
  cells_[index_of(site)] = static_cast<std::uint32_t>(floor_mod(value, modulus_.value()));
}

bool Configuration::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](std::uint32_t v) { return v == 0; });
}

bool operator==(const Configuration& lhs, const Configuration& rhs) {
  if (lhs.modulus_ != rhs.modulus_ || lhs.dimension() != rhs.dimension()) {
    return false;
  }
  if (lhs.box_ == rhs.box_) {
    return lhs.cells_ == rhs.cells_;
  }
  bool equal = true;
  for_each_site(lhs.box_.united(rhs.box_), [&](const Site& s) {
    equal = equal && lhs.at(s) == rhs.at(s);
  });
  return equal;
}

Configuration add(const Configuration& lhs, const Configuration& rhs) {
  if (lhs.modulus() != rhs.modulus()) {
    throw Error("cannot add configurations over different moduli");
  }
  Configuration out(lhs.modulus(), lhs.box().united(rhs.box()));
  for_each_site(out.box(), [&](const Site& s) { out.set(s, lhs.at(s) + rhs.at(s)); });
  return out;
}

Configuration scale(const Configuration& u, Residue k) {
  if (k.modulus() != u.modulus()) {
    throw Error("scale factor belongs to a different modulus");
  }
  Configuration out(u.modulus(), u.box());
  for_each_site(u.box(), [&](const Site& s) { out.set(s, u.at(s) * k.value()); });
  return out;
}

Configuration single_site_seed(Modulus n, int dimension, Residue a) {
  if (a.modulus() != n) {
    throw Error("seed belongs to a different modulus");
  }
  if (a.is_zero()) {
    throw Error("seed must be nonzero");
  }
  Configuration c(n, Box::cube(dimension, 0));
  c.set(Site{}, a.value());
  return c;
}

Configuration step(const Configuration& c, const TransitionRule& rule) {
  if (rule.dimension() != c.dimension()) {
    throw Error("rule dimension does not match configuration dimension");
  }
  const std::int64_t n = c.modulus().value();
  Configuration out(c.modulus(), c.box().expanded(rule_radius(rule)));

  // Scatter form of (Tu)_i = sum_j c_j u_{i+v_j}: input cell x contributes
  // c_j * u_x to output cell x - v_j.
  for (const auto& term : rule.terms()) {
    const std::int64_t coef = floor_mod(term.coefficient, n);
    if (coef == 0) {
      continue;
    }
    Site shift{};
    for (int a = 0; a < rule.dimension(); ++a) {
      shift[a] = -term.offset[a];
    }
    std::size_t in_idx = 0;
    for_each_site(c.box(), [&](const Site& x) {
      const std::int64_t u = c.cells_[in_idx++];
      if (u == 0) {
        return;
      }
      Site target = x;
      for (int a = 0; a < rule.dimension(); ++a) {
        target[a] += shift[a];
      }
      auto& cell = out.cells_[out.index_of(target)];
      cell = static_cast<std::uint32_t>((cell + coef * u) % n);
    });
  }
  return out;
}

Pattern evolve(Modulus n, const TransitionRule& rule, Residue a, std::int64_t t_max) {
  if (t_max < 0) {
    throw Error("number of steps must be nonnegative");
  }
  const std::int64_t r = rule_radius(rule);
  // Guard the light-cone volume before allocating anything.
  std::size_t total = 0;
  for (std::int64_t t = 0; t <= t_max; ++t) {
    const long double side = 2.0L * static_cast<long double>(r) * t + 1;
    long double vol = 1;
    for (int d = 0; d < rule.dimension(); ++d) {
      vol *= side;
    }
    if (vol + total > static_cast<long double>(kMaxPatternCells)) {
      throw Error("pattern too large: more than " + std::to_string(kMaxPatternCells) +
                  " cells up to t=" + std::to_string(t));
    }
    total += static_cast<std::size_t>(vol);
  }

  Pattern p{n, rule, a, {}};
  p.rows.reserve(static_cast<std::size_t>(t_max) + 1);
  p.rows.push_back(single_site_seed(n, rule.dimension(), a));
  for (std::int64_t t = 1; t <= t_max; ++t) {
    p.rows.push_back(step(p.rows.back(), rule));
  }
  return p;
}

ReachableStates reachable_states(const Pattern& p) {
  std::set<std::int64_t> seen;
  for (const auto& row : p.rows) {
    seen.insert(row.cells().begin(), row.cells().end());
  }
  return {std::vector<std::int64_t>(seen.begin(), seen.end()), p.horizon()};
}

}  // namespace linca
