#include "linca/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace linca::oracle {

NaiveEvaluator::NaiveEvaluator(std::int64_t n, TransitionRule rule, std::int64_t seed)
    : n_(n), rule_(std::move(rule)), seed_(seed) {
  if (n_ < 2) {
    throw Error("oracle modulus must be at least 2");
  }
}

std::int64_t NaiveEvaluator::cell(std::int64_t t, const Site& site) {
  if (t < 0 || t > kMaxNaiveSteps) {
    throw Error("naive evaluation is bounded to t <= " + std::to_string(kMaxNaiveSteps));
  }
  return eval(t, site);
}

std::int64_t NaiveEvaluator::eval(std::int64_t t, const Site& site) {
  if (t == 0) {
    const bool origin = std::all_of(site.begin(), site.end(), [](std::int64_t x) { return x == 0; });
    return origin ? ((seed_ % n_) + n_) % n_ : 0;
  }
  const auto key = std::make_pair(t, site);
  if (const auto it = memo_.find(key); it != memo_.end()) {
    return it->second;
  }
  std::int64_t sum = 0;
  for (const auto& term : rule_.terms()) {
    Site neighbour = site;
    for (std::size_t a = 0; a < term.offset.size(); ++a) {
      neighbour[a] += term.offset[a];
    }
    const std::int64_t c = ((term.coefficient % n_) + n_) % n_;
    sum = (sum + c * eval(t - 1, neighbour)) % n_;
  }
  memo_.emplace(key, sum);
  return sum;
}

std::int64_t naive_cell(std::int64_t n, const TransitionRule& rule, std::int64_t seed,
                        std::int64_t t, const Site& site) {
  return NaiveEvaluator(n, rule, seed).cell(t, site);
}

std::vector<StateMap> search_state_maps(const Pattern& p, const Pattern& q) {
  if (!(p.rule == q.rule) || p.horizon() != q.horizon()) {
    throw Error("witness search needs patterns of one rule and one horizon");
  }

  // Every (p state, q state) pair that co-occurs at some site and time.
  std::set<std::pair<std::int64_t, std::int64_t>> pairs;
  std::set<std::int64_t> delta_p{0};
  std::set<std::int64_t> delta_q{0};
  for (std::int64_t t = 0; t <= p.horizon(); ++t) {
    const auto& pr = p.rows[t];
    const auto& qr = q.rows[t];
    for_each_site(pr.box().united(qr.box()), [&](const Site& s) {
      const std::int64_t x = pr.at(s);
      const std::int64_t y = qr.at(s);
      pairs.emplace(x, y);
      delta_p.insert(x);
      delta_q.insert(y);
    });
  }
  if (delta_p.size() > kMaxSearchStates || delta_q.size() > kMaxSearchStates) {
    throw Error("state sets too large for exhaustive search (limit " +
                std::to_string(kMaxSearchStates) + ")");
  }
  if (delta_p.size() != delta_q.size()) {
    return {};
  }

  const std::vector<std::int64_t> domain(std::next(delta_p.begin()), delta_p.end());
  std::vector<std::int64_t> image(std::next(delta_q.begin()), delta_q.end());
  std::vector<StateMap> out;
  do {
    auto image_of = [&](std::int64_t x) -> std::int64_t {
      if (x == 0) {
        return 0;
      }
      const auto k = std::lower_bound(domain.begin(), domain.end(), x) - domain.begin();
      return image[static_cast<std::size_t>(k)];
    };
    const bool consistent = std::all_of(pairs.begin(), pairs.end(), [&](const auto& pr) {
      return image_of(pr.first) == pr.second;
    });
    if (consistent) {
      std::vector<StateMap::Entry> table{{0, 0}};
      for (std::size_t k = 0; k < domain.size(); ++k) {
        table.emplace_back(domain[k], image[k]);
      }
      out.push_back(StateMap::make(p.modulus, q.modulus, std::move(table)));
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

bool is_witness(const std::vector<StateMap>& witnesses, const StateMap& constructed) {
  return std::any_of(witnesses.begin(), witnesses.end(), [&](const StateMap& w) {
    const auto domain = w.domain();
    const bool covered = std::all_of(domain.begin(), domain.end(), [&](std::int64_t b) {
      return constructed.apply(b).has_value();
    });
    return covered && constructed.restricted_to(domain) == w;
  });
}

std::vector<std::int64_t> binomial_parity_row(std::int64_t t) {
  if (t < 0 || t > kMaxBinomialRow) {
    throw Error("binomial row index must lie in [0, 64]");
  }
  // Exact Pascal row over 64-bit integers; C(64, 32) < 2^61.
  std::vector<std::uint64_t> pascal{1};
  for (std::int64_t k = 0; k < t; ++k) {
    std::vector<std::uint64_t> next(pascal.size() + 1, 0);
    for (std::size_t j = 0; j < pascal.size(); ++j) {
      next[j] += pascal[j];
      next[j + 1] += pascal[j];
    }
    pascal = std::move(next);
  }
  std::vector<std::int64_t> row(static_cast<std::size_t>(2 * t + 1), 0);
  for (std::int64_t i = -t; i <= t; ++i) {
    if ((t + i) % 2 == 0) {
      row[static_cast<std::size_t>(i + t)] =
          static_cast<std::int64_t>(pascal[static_cast<std::size_t>((t + i) / 2)] % 2);
    }
  }
  return row;
}

std::optional<Failure> cross_check(const Pattern& p) {
  NaiveEvaluator naive(p.modulus.value(), p.rule, p.seed.value());
  const std::int64_t last = std::min(p.horizon(), kMaxNaiveSteps);
  for (std::int64_t t = 0; t <= last; ++t) {
    std::optional<Failure> failure;
    for_each_site(p.rows[t].box(), [&](const Site& s) {
      if (!failure && p.rows[t].at(s) != naive.cell(t, s)) {
        failure = Failure{t, s};
      }
    });
    if (failure) {
      return failure;
    }
  }
  return std::nullopt;
}

}  // namespace linca::oracle
