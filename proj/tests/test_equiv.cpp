#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linca/equiv.hpp"
#include "support.hpp"

using namespace linca;

namespace {

using Table = std::vector<StateMap::Entry>;

Pattern pattern(std::int64_t n, std::int64_t a, const TransitionRule& rule, std::int64_t tmax) {
  const Modulus m(n);
  return evolve(m, rule, Residue(m, a), tmax);
}

}  // namespace

TEST_CASE("state map construction invariants") {
  const Modulus four(4), two(2);
  CHECK_NOTHROW(StateMap::make(four, two, {{0, 0}, {2, 1}}));
  CHECK_THROWS_WITH_AS(StateMap::make(four, four, {{0, 0}, {1, 2}, {2, 0}, {3, 2}}),
                       doctest::Contains("not injective"), Error);
  CHECK_THROWS_WITH_AS(StateMap::make(four, four, {{0, 1}, {1, 0}}),
                       doctest::Contains("0 to 0"), Error);
  CHECK_THROWS_WITH_AS(StateMap::make(four, four, {{1, 1}}), doctest::Contains("contain 0"),
                       Error);
  CHECK_THROWS_AS(StateMap::make(four, two, {{0, 0}, {2, 2}}), Error);
  CHECK_THROWS_AS(StateMap::make(four, four, {{0, 0}, {1, 1}, {1, 2}}), Error);

  const auto f = StateMap::make(four, two, {{2, 1}, {0, 0}});
  CHECK(f.table() == Table{{0, 0}, {2, 1}});
  CHECK(f.apply(2) == 1);
  CHECK_FALSE(f.apply(1).has_value());
  CHECK(f.inverse().table() == Table{{0, 0}, {1, 2}});
  CHECK(f.to_string() == "0->0 2->1");
}

TEST_CASE("seed_map reproduces the f_a tables over Z/5Z") {
  const Modulus five(5);
  const std::vector<std::vector<std::int64_t>> expected = {
      {1, 2, 3, 4}, {2, 4, 1, 3}, {3, 1, 4, 2}, {4, 3, 2, 1}};
  for (std::int64_t a = 1; a <= 4; ++a) {
    const auto f = seed_map(five, Residue(five, 1), Residue(five, a));
    std::vector<std::int64_t> row;
    for (std::int64_t b = 1; b <= 4; ++b) {
      row.push_back(*f.apply(b));
    }
    CHECK(row == expected[static_cast<std::size_t>(a - 1)]);
    CHECK(f.apply(0) == 0);
  }
}

TEST_CASE("seed_map examples") {
  const Modulus three(3), seven(7), six(6);
  CHECK(seed_map(three, Residue(three, 1), Residue(three, 2)).table() ==
        Table{{0, 0}, {1, 2}, {2, 1}});
  CHECK(seed_map(seven, Residue(seven, 3), Residue(seven, 3)) == StateMap::identity(seven));
  CHECK_THROWS_WITH_AS(seed_map(six, Residue(six, 2), Residue(six, 1)),
                       doctest::Contains("canonicalize"), Error);
  CHECK_THROWS_AS(seed_map(six, Residue(six, 1), Residue(six, 3)), Error);
}

TEST_CASE("canonicalize examples") {
  const Modulus six(6), four(4), nine(9);

  auto c = canonicalize(six, Residue(six, 3));
  CHECK(c.r.value() == 2);
  CHECK(c.d == 3);
  CHECK(c.map.table() == Table{{0, 0}, {3, 1}});

  c = canonicalize(four, Residue(four, 2));
  CHECK(c.r.value() == 2);
  CHECK(c.map.table() == Table{{0, 0}, {2, 1}});

  c = canonicalize(six, Residue(six, 4));
  CHECK(c.r.value() == 3);
  CHECK(c.d == 2);
  CHECK(c.map.table() == Table{{0, 0}, {2, 2}, {4, 1}});

  c = canonicalize(nine, Residue(nine, 1));
  CHECK(c.r.value() == 9);
  CHECK(c.map == StateMap::identity(nine));

  CHECK_THROWS_WITH_AS(canonicalize(six, Residue(six, 0)), doctest::Contains("nonzero"), Error);
}

TEST_CASE("canonicalize sends the seed to 1 and is idempotent") {
  for (std::int64_t n = 2; n <= 40; ++n) {
    const Modulus m(n);
    const auto self = canonicalize(m, Residue(m, 1));
    CHECK(self.r == m);
    CHECK(self.map == StateMap::identity(m));
    for (std::int64_t a = 1; a < n; ++a) {
      const auto c = canonicalize(m, Residue(m, a));
      CHECK(c.map.apply(a) == 1);
      CHECK(c.map.apply(0) == 0);
      CHECK(c.d * c.r.value() == n);
      const auto again = canonicalize(c.r, Residue(c.r, 1));
      CHECK(again.r == c.r);
      CHECK(again.map == StateMap::identity(c.r));
    }
  }
}

TEST_CASE("verify_isomorphism examples") {
  const auto rule = rule90_analog();
  const Modulus five(5), four(4);

  auto cert = verify_isomorphism(pattern(5, 1, rule, 15), pattern(5, 2, rule, 15),
                                 seed_map(five, Residue(five, 1), Residue(five, 2)));
  CHECK(cert.verified());

  cert = verify_isomorphism(pattern(4, 2, rule, 15), pattern(2, 1, rule, 15),
                            canonicalize(four, Residue(four, 2)).map);
  CHECK(cert.verified());
}

TEST_CASE("a wrong map is falsified at the first failing cell") {
  const auto rule = rule90_analog();
  const Modulus five(5);
  // Identity between seed 1 and seed 2 fails at the origin at t = 0.
  auto cert = verify_isomorphism(pattern(5, 1, rule, 6), pattern(5, 2, rule, 6),
                                 StateMap::identity(five));
  REQUIRE_FALSE(cert.verified());
  CHECK(cert.failure->t == 0);
  CHECK(cert.failure->site[0] == 0);

  // Agrees on 0 and 1 but not on 2, which first appears at t = 2, i = 0.
  const auto partial = StateMap::make(five, five, {{0, 0}, {1, 1}, {2, 3}, {3, 2}, {4, 4}});
  cert = verify_isomorphism(pattern(5, 1, rule, 6), pattern(5, 1, rule, 6), partial);
  REQUIRE_FALSE(cert.verified());
  CHECK(cert.failure->t == 2);
  CHECK(cert.failure->site[0] == 0);

  // A map whose domain misses a reachable state fails there.
  const auto narrow = StateMap::make(five, five, {{0, 0}, {1, 1}});
  cert = verify_isomorphism(pattern(5, 1, rule, 6), pattern(5, 1, rule, 6), narrow);
  REQUIRE_FALSE(cert.verified());
  CHECK(cert.failure->t == 2);
}

TEST_CASE("verify detects support mismatches across different light cones") {
  const Modulus three(3);
  const auto wide = parse_rule("1@(-2);1@(2)");
  const auto p = evolve(three, wide, Residue(three, 1), 3);
  auto q = evolve(three, wide, Residue(three, 1), 3);
  q.rows[3].set(Site{6, 0, 0}, 0);
  const auto cert = verify_isomorphism(p, q, StateMap::identity(three));
  REQUIRE_FALSE(cert.verified());
  CHECK(cert.failure->t == 3);
  CHECK(cert.failure->site[0] == 6);
}

TEST_CASE("verify rejects incomparable patterns") {
  const Modulus five(5);
  const auto id = StateMap::identity(five);
  const auto p = pattern(5, 1, rule90_analog(), 4);
  CHECK_THROWS_AS(verify_isomorphism(p, pattern(5, 1, rule90_analog(), 5), id), Error);
  CHECK_THROWS_AS(verify_isomorphism(p, pattern(5, 1, parse_rule("1@(0)"), 4), id), Error);
  CHECK_THROWS_AS(verify_isomorphism(p, pattern(3, 1, rule90_analog(), 4), id), Error);
}

TEST_CASE("seed_pair_map") {
  const Modulus six(6);
  CHECK(seed_pair_map(six, Residue(six, 1), Residue(six, 5)) ==
        seed_map(six, Residue(six, 1), Residue(six, 5)));
  CHECK(seed_pair_map(six, Residue(six, 2), Residue(six, 4)).table() ==
        Table{{0, 0}, {2, 4}, {4, 2}});
  try {
    seed_pair_map(six, Residue(six, 2), Residue(six, 3));
    FAIL("expected IncomparableSeeds");
  } catch (const IncomparableSeeds& e) {
    CHECK(e.r_a() == 3);
    CHECK(e.r_b() == 2);
    CHECK(std::string(e.what()) == "seeds lie in different canonical classes: r_a=3 r_b=2");
  }
}

TEST_CASE("certificate serialization") {
  const Modulus six(6);
  const auto rule = rule90_analog();
  auto cert = verify_isomorphism(pattern(6, 4, rule, 5), pattern(3, 1, rule, 5),
                                 canonicalize(six, Residue(six, 4)).map);
  CHECK(serialize(cert) ==
        "certificate v1\n"
        "source n=6 a=4 rule=\"1@(-1);1@(1)\" tmax=5\n"
        "target n=3 a=1\n"
        "map 0->0\n"
        "map 2->2\n"
        "map 4->1\n"
        "status verified\n");

  const auto rule2d = parse_rule("1@(-1,0);1@(1,0);1@(0,-1);1@(0,1)", 2);
  cert = verify_isomorphism(pattern(3, 1, rule2d, 2), pattern(3, 2, rule2d, 2),
                            StateMap::identity(Modulus(3)));
  const auto text = serialize(cert);
  CHECK(text.find("status falsified t=0 i=0,0\n") != std::string::npos);
}

TEST_CASE("equivalence classes") {
  const auto rule = rule90_analog();

  auto classes = equivalence_classes(Modulus(6), rule, 32);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].seeds == std::vector<std::int64_t>{1, 5});
  CHECK(classes[0].r.value() == 6);
  CHECK(classes[1].seeds == std::vector<std::int64_t>{2, 4});
  CHECK(classes[1].r.value() == 3);
  CHECK(classes[2].seeds == std::vector<std::int64_t>{3});
  CHECK(classes[2].r.value() == 2);
  for (const auto& c : classes) {
    CHECK(c.verified());
    CHECK(c.certificates.size() == c.seeds.size());
  }

  classes = equivalence_classes(Modulus(5), rule, 15);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].seeds == std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(classes[0].r.value() == 5);

  classes = equivalence_classes(Modulus(2), rule, 15);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].seeds == std::vector<std::int64_t>{1});
  CHECK(classes[0].r.value() == 2);
}

TEST_CASE("constructed maps verify for every fixture rule, n <= 12") {
  for (const auto& fr : testing::fixture_rules()) {
    const auto rule = parse_rule(fr.text, fr.dimension);
    const std::int64_t tmax = fr.dimension == 1 ? 32 : 10;
    for (std::int64_t n = 2; n <= 12; ++n) {
      const Modulus m(n);
      for (std::int64_t a = 1; a < n; ++a) {
        const auto c = canonicalize(m, Residue(m, a));
        const auto cert = verify_isomorphism(pattern(n, a, rule, tmax),
                                             evolve(c.r, rule, Residue(c.r, 1), tmax), c.map);
        CAPTURE(fr.text);
        CAPTURE(n);
        CAPTURE(a);
        CHECK(cert.verified());
      }
    }
  }
}

TEST_CASE("states of pattern(n, a) are multiples of gcd(n, a)") {
  for (const auto& fr : testing::fixture_rules_1d()) {
    const auto rule = parse_rule(fr.text);
    for (std::int64_t n = 2; n <= 12; ++n) {
      for (std::int64_t a = 1; a < n; ++a) {
        const auto d = static_cast<std::int64_t>(gcd(n, a));
        for (const auto s : reachable_states(pattern(n, a, rule, 32)).states) {
          CHECK(s % d == 0);
        }
      }
    }
  }
}

TEST_CASE("inverse tables witness the reverse isomorphism") {
  const auto rule = parse_rule("1@(-1);2@(0);3@(1)");
  for (std::int64_t n = 2; n <= 12; ++n) {
    const Modulus m(n);
    for (std::int64_t a = 1; a < n; ++a) {
      const auto c = canonicalize(m, Residue(m, a));
      const auto p = pattern(n, a, rule, 20);
      const auto q = evolve(c.r, rule, Residue(c.r, 1), 20);
      CHECK(verify_isomorphism(q, p, c.map.inverse()).verified());
      for (std::int64_t b = 1; b < n; ++b) {
        if (gcd(n, a) != gcd(n, b)) {
          continue;
        }
        const auto f = seed_pair_map(m, Residue(m, a), Residue(m, b));
        CHECK(f.apply(0) == 0);
        const auto pb = pattern(n, b, rule, 20);
        CHECK(verify_isomorphism(p, pb, f).verified());
        CHECK(verify_isomorphism(pb, p, f.inverse()).verified());
      }
    }
  }
}
