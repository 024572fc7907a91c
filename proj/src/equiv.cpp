#include "linca/equiv.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace linca {

StateMap StateMap::make(Modulus source, Modulus target, std::vector<Entry> table) {
  std::sort(table.begin(), table.end());
  std::set<std::int64_t> images;
  bool has_zero = false;
  for (std::size_t k = 0; k < table.size(); ++k) {
    const auto [b, fb] = table[k];
    if (b < 0 || b >= source.value() || fb < 0 || fb >= target.value()) {
      throw Error("state map entry " + std::to_string(b) + "->" + std::to_string(fb) +
                  " out of range");
    }
    if (k > 0 && table[k - 1].first == b) {
      throw Error("state map lists " + std::to_string(b) + " twice");
    }
    if (!images.insert(fb).second) {
      throw Error("state map is not injective: " + std::to_string(fb) +
                  " has several preimages");
    }
    if (b == 0) {
      if (fb != 0) {
        throw Error("state map must send 0 to 0");
      }
      has_zero = true;
    }
  }
  if (!has_zero) {
    throw Error("state map domain must contain 0");
  }
  return StateMap(source, target, std::move(table));
}

StateMap StateMap::identity(Modulus n) {
  std::vector<Entry> table;
  for (std::int64_t b = 0; b < n.value(); ++b) {
    table.emplace_back(b, b);
  }
  return StateMap(n, n, std::move(table));
}

std::vector<std::int64_t> StateMap::domain() const {
  std::vector<std::int64_t> out;
  out.reserve(table_.size());
  for (const auto& [b, fb] : table_) {
    out.push_back(b);
  }
  return out;
}

std::optional<std::int64_t> StateMap::apply(std::int64_t b) const {
  const auto it = std::lower_bound(table_.begin(), table_.end(), Entry{b, 0},
                                   [](const Entry& x, const Entry& y) { return x.first < y.first; });
  if (it == table_.end() || it->first != b) {
    return std::nullopt;
  }
  return it->second;
}

StateMap StateMap::inverse() const {
  std::vector<Entry> table;
  table.reserve(table_.size());
  for (const auto& [b, fb] : table_) {
    table.emplace_back(fb, b);
  }
  return make(target_, source_, std::move(table));
}

StateMap StateMap::restricted_to(const std::vector<std::int64_t>& states) const {
  std::vector<Entry> table;
  for (const std::int64_t b : states) {
    const auto fb = apply(b);
    if (!fb) {
      throw Error("state " + std::to_string(b) + " outside map domain");
    }
    table.emplace_back(b, *fb);
  }
  return make(source_, target_, std::move(table));
}

std::string StateMap::to_string() const {
  std::string out;
  for (const auto& [b, fb] : table_) {
    if (!out.empty()) {
      out += ' ';
    }
    out += std::to_string(b) + "->" + std::to_string(fb);
  }
  return out;
}

StateMap compose(const StateMap& g, const StateMap& f) {
  if (f.target() != g.source()) {
    throw Error("cannot compose state maps: moduli do not chain");
  }
  std::vector<StateMap::Entry> table;
  for (const auto& [b, fb] : f.table()) {
    if (const auto gfb = g.apply(fb)) {
      table.emplace_back(b, *gfb);
    }
  }
  return StateMap::make(f.source(), g.target(), std::move(table));
}

StateMap seed_map(Modulus n, Residue a, Residue a_hat) {
  if (a.modulus() != n || a_hat.modulus() != n) {
    throw Error("seeds belong to a different modulus");
  }
  if (!is_unit(a) || !is_unit(a_hat)) {
    throw Error("unit-seed map requires seeds coprime to " + std::to_string(n.value()) +
                "; use canonicalize for other seeds");
  }
  const ScaleMap f = scale_map(a_hat * inverse(a));
  std::vector<StateMap::Entry> table;
  for (std::int64_t b = 0; b < n.value(); ++b) {
    table.emplace_back(b, f(Residue(n, b)).value());
  }
  return StateMap::make(n, n, std::move(table));
}

Canonical canonicalize(Modulus n, Residue a) {
  if (a.modulus() != n) {
    throw Error("seed belongs to a different modulus");
  }
  if (a.is_zero()) {
    throw Error("seed must be nonzero");
  }
  const auto d = static_cast<std::int64_t>(
      gcd(static_cast<std::uint64_t>(n.value()), static_cast<std::uint64_t>(a.value())));
  if (d == 1) {
    // Already a unit: only the scaling step a -> 1 remains.
    return {n, 1, seed_map(n, a, Residue(n, 1))};
  }
  const QuotientMap quotient = quotient_map(n, d);
  const Modulus r = quotient.target();
  // a/d is a unit mod r because gcd(n/d, a/d) = 1.
  const ScaleMap to_seed_one = scale_map(inverse(quotient(a)));

  std::vector<StateMap::Entry> table;
  for (std::int64_t b = 0; b < n.value(); b += d) {
    table.emplace_back(b, to_seed_one(quotient(Residue(n, b))).value());
  }
  return {r, d, StateMap::make(n, r, std::move(table))};
}

StateMap seed_pair_map(Modulus n, Residue a, Residue b) {
  const Canonical ca = canonicalize(n, a);
  const Canonical cb = canonicalize(n, b);
  if (ca.d != cb.d) {
    throw IncomparableSeeds(ca.r.value(), cb.r.value());
  }
  if (ca.d == 1) {
    return seed_map(n, a, b);
  }
  return compose(cb.map.inverse(), ca.map);
}

Certificate verify_isomorphism(const Pattern& p, const Pattern& q, const StateMap& f) {
  if (!(p.rule == q.rule)) {
    throw Error("patterns were generated by different rules");
  }
  if (p.dimension() != q.dimension()) {
    throw Error("patterns have different dimensions");
  }
  if (p.horizon() != q.horizon()) {
    throw Error("patterns have different horizons");
  }
  if (f.source() != p.modulus || f.target() != q.modulus) {
    throw Error("state map moduli do not match the patterns");
  }

  Certificate cert{{p.modulus.value(), p.seed.value()},
                   {q.modulus.value(), q.seed.value()},
                   p.rule,
                   p.dimension(),
                   p.horizon(),
                   f,
                   std::nullopt};

  for (std::int64_t t = 0; t <= p.horizon() && !cert.failure; ++t) {
    const auto& pr = p.rows[t];
    const auto& qr = q.rows[t];
    for_each_site(pr.box().united(qr.box()), [&](const Site& s) {
      if (cert.failure) {
        return;
      }
      const auto mapped = f.apply(pr.at(s));
      if (!mapped || *mapped != qr.at(s)) {
        cert.failure = Failure{t, s};
      }
    });
  }
  return cert;
}

std::string serialize(const Certificate& c) {
  std::ostringstream out;
  out << "certificate v1\n";
  out << "source n=" << c.source.n << " a=" << c.source.seed << " rule=\"" << format_rule(c.rule)
      << "\" tmax=" << c.horizon << "\n";
  out << "target n=" << c.target.n << " a=" << c.target.seed << "\n";
  for (const auto& [b, fb] : c.map.table()) {
    out << "map " << b << "->" << fb << "\n";
  }
  if (c.verified()) {
    out << "status verified\n";
  } else {
    out << "status falsified t=" << c.failure->t << " i=";
    for (int a = 0; a < c.dimension; ++a) {
      out << (a ? "," : "") << c.failure->site[a];
    }
    out << "\n";
  }
  return out.str();
}

bool SeedClass::verified() const {
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const Certificate& c) { return c.verified(); });
}

std::vector<SeedClass> equivalence_classes(Modulus n, const TransitionRule& rule,
                                           std::int64_t t_max) {
  std::map<std::int64_t, SeedClass> by_gcd;
  std::map<std::int64_t, Pattern> canonical_patterns;
  for (std::int64_t a = 1; a < n.value(); ++a) {
    const Residue seed(n, a);
    Canonical canon = canonicalize(n, seed);
    auto it = canonical_patterns.find(canon.r.value());
    if (it == canonical_patterns.end()) {
      it = canonical_patterns
               .emplace(canon.r.value(), evolve(canon.r, rule, Residue(canon.r, 1), t_max))
               .first;
    }
    const Pattern source = evolve(n, rule, seed, t_max);
    auto cls = by_gcd.try_emplace(canon.d, SeedClass{canon.r, canon.d, {}, {}}).first;
    cls->second.seeds.push_back(a);
    cls->second.certificates.push_back(verify_isomorphism(source, it->second, canon.map));
  }

  std::vector<SeedClass> out;
  out.reserve(by_gcd.size());
  for (auto& [d, cls] : by_gcd) {
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace linca
