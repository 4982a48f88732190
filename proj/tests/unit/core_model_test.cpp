#include <doctest.h>

#include <random>
#include <variant>

#include "sofic2/comb_rep.hpp"
#include "sofic2/error.hpp"
#include "sofic2/orbit_count.hpp"
#include "sofic2/periodic.hpp"
#include "sofic2/structure_graph.hpp"
#include "sofic2/word.hpp"
#include "testkit.hpp"

using namespace sofic2;

namespace {

Word random_word(testkit::Rng& rng, std::size_t len, std::size_t letters) {
  Word w;
  for (std::size_t i = 0; i < len; ++i) {
    w.emplace_back(std::string(1, static_cast<char>('a' + rng() % letters)));
  }
  return w;
}

// Independent least-rotation: try every rotation.
std::size_t brute_least_rotation(const Word& w) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (rotate_left(w, k) < rotate_left(w, best)) best = k;
  }
  return best;
}

// Raw configuration left|middle|right sampled on a window.
Symbol raw_at(const PeriodicPoint& left, const Word& middle, const PeriodicPoint& right, std::int64_t t) {
  const auto d = static_cast<std::int64_t>(middle.size());
  if (t < 0) return left.at(t);
  if (t < d) return middle[static_cast<std::size_t>(t)];
  return right.at(t - d);
}

Symbol config_at(const Configuration& c, std::int64_t t) {
  if (const auto* p = std::get_if<PeriodicPoint>(&c)) return p->at(t);
  return std::get<EventuallyPeriodicPoint>(c).at(t);
}

}  // namespace

TEST_CASE("word syntax") {
  CHECK(parse_word("-").empty());
  CHECK(parse_word("01") == Word{Symbol("0"), Symbol("1")});
  CHECK(parse_word("a[bc]d") == Word{Symbol("a"), Symbol("bc"), Symbol("d")});
  CHECK(format_word(parse_word("a[bc]d")) == "a[bc]d");
  CHECK(format_word({Symbol("-")}) == "[-]");
  CHECK(format_word({}) == "-");
  CHECK_THROWS_AS(parse_word("a[b"), Error);
  CHECK_THROWS_AS(parse_word("a=b"), Error);
  CHECK_THROWS_AS(Symbol("a b"), Error);
  CHECK_THROWS_AS(Symbol(""), Error);
}

TEST_CASE("primitive_root examples") {
  CHECK(primitive_root(word_of("0101")) == std::pair{word_of("01"), std::size_t{2}});
  CHECK(primitive_root(word_of("011")) == std::pair{word_of("011"), std::size_t{1}});
  CHECK(primitive_root(word_of("aaa")) == std::pair{word_of("a"), std::size_t{3}});
  try {
    primitive_root({});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyWord);
  }
}

TEST_CASE("primitive_root and least rotation against brute force") {
  testkit::Rng rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word w = random_word(rng, 1 + rng() % 9, 1 + rng() % 3);
    const auto [root, e] = primitive_root(w);
    Word power;
    for (std::size_t i = 0; i < e; ++i) power = concat(power, root);
    CHECK(power == w);
    for (std::size_t d = 1; d < root.size(); ++d) {
      if (root.size() % d != 0) continue;
      CHECK(rotate_left(root, d) != root);
    }
    const std::size_t k = least_rotation_offset(w);
    CHECK(rotate_left(w, k) == rotate_left(w, brute_least_rotation(w)));
  }
}

TEST_CASE("canonicalize_point examples") {
  const auto p = canonicalize_point(word_of("21"), 0);
  CHECK(p.orbit.root() == word_of("12"));
  CHECK(p.phase == 1);
  const auto q = canonicalize_point(word_of("0"), 5);
  CHECK(q.orbit.root() == word_of("0"));
  CHECK(q.phase == 0);
  const auto r = canonicalize_point(word_of("1212"), 1);
  CHECK(r.orbit.root() == word_of("12"));
  CHECK(r.phase == 1);
  CHECK_THROWS_AS(canonicalize_point({}, 0), Error);
}

TEST_CASE("canonicalize_point is invariant under rotation") {
  testkit::Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Word u = random_word(rng, 1 + rng() % 8, 1 + rng() % 3);
    const auto phase = static_cast<std::int64_t>(rng() % 20) - 10;
    const auto base = canonicalize_point(u, phase);
    for (std::size_t k = 0; k < u.size(); ++k) {
      CHECK(canonicalize_point(rotate_left(u, k), phase - static_cast<std::int64_t>(k)) == base);
    }
    for (std::int64_t t = -12; t < 12; ++t) {
      CHECK(base.at(t) == u[static_cast<std::size_t>(floor_mod(t + phase, static_cast<std::int64_t>(u.size())))]);
    }
  }
}

TEST_CASE("shift_point") {
  const auto o = PeriodicOrbit::of(word_of("12"));
  CHECK(shift_point({o, 0}, 1) == PeriodicPoint{o, 1});
  CHECK(shift_point({o, 1}, 1) == PeriodicPoint{o, 0});
  const auto z = PeriodicOrbit::of(word_of("0"));
  CHECK(shift_point({z, 0}, -7) == PeriodicPoint{z, 0});

  testkit::Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = canonicalize_point(random_word(rng, 1 + rng() % 6, 3), static_cast<std::int64_t>(rng() % 7));
    const auto a = static_cast<std::int64_t>(rng() % 21) - 10;
    const auto b = static_cast<std::int64_t>(rng() % 21) - 10;
    CHECK(shift_point(x, static_cast<std::int64_t>(x.period())) == x);
    CHECK(shift_point(shift_point(x, a), b) == shift_point(x, a + b));
    for (std::int64_t t = -5; t < 5; ++t) CHECK(shift_point(x, a).at(t) == x.at(t + a));
  }
}

TEST_CASE("canonicalize_config examples") {
  const auto zero = canonicalize_point(word_of("0"), 0);
  const auto one = canonicalize_config(zero, word_of("1"), zero);
  REQUIRE(std::holds_alternative<EventuallyPeriodicPoint>(one));
  const auto& e = std::get<EventuallyPeriodicPoint>(one);
  CHECK(e.defect == word_of("1"));
  CHECK(e.left == zero);
  CHECK(e.right == zero);

  const auto absorbed = canonicalize_config(zero, word_of("0"), zero);
  REQUIRE(std::holds_alternative<PeriodicPoint>(absorbed));
  CHECK(std::get<PeriodicPoint>(absorbed) == zero);

  const auto z = canonicalize_config(canonicalize_point(word_of("12"), 0), word_of("1"),
                                     canonicalize_point(word_of("13"), 0));
  REQUIRE(std::holds_alternative<EventuallyPeriodicPoint>(z));
  CHECK(std::get<EventuallyPeriodicPoint>(z).left.orbit.root() == word_of("12"));
  CHECK(std::get<EventuallyPeriodicPoint>(z).right.orbit.root() == word_of("13"));
}

TEST_CASE("canonicalize_config describes a shift of its input and is constant on orbits") {
  testkit::Rng rng(17);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t letters = 2 + rng() % 2;
    const Word u = random_word(rng, 1 + rng() % 3, letters);
    const Word v = random_word(rng, 1 + rng() % 3, letters);
    const auto left = canonicalize_point(u, static_cast<std::int64_t>(rng() % 3));
    const auto right = canonicalize_point(v, static_cast<std::int64_t>(rng() % 3));
    const Word middle = random_word(rng, rng() % 4, letters);
    const Configuration c = canonicalize_config(left, middle, right);
    const auto window = static_cast<std::int64_t>(4 * (middle.size() + u.size() + v.size()));

    // The canonical form equals the raw configuration shifted by some n.
    bool matched = false;
    for (std::int64_t n = -window; n <= window && !matched; ++n) {
      bool same = true;
      for (std::int64_t t = -3 * window; t <= 3 * window && same; ++t) {
        same = config_at(c, t) == raw_at(left, middle, right, t + n);
      }
      matched = same;
    }
    CHECK(matched);

    for (std::int64_t n = -10; n <= 10; ++n) {
      // Cut a shift of z into a left tail, a longer middle and a right tail.
      const std::int64_t pad = 12;
      const std::int64_t cut_left = -n - pad;
      const std::int64_t cut_right = static_cast<std::int64_t>(middle.size()) + pad;
      Word middle2;
      for (std::int64_t t = cut_left; t < cut_right; ++t) middle2.push_back(raw_at(left, middle, right, t));
      const auto left2 = shift_point(left, cut_left);
      const auto right2 = shift_point(right, cut_right - static_cast<std::int64_t>(middle.size()));
      const Configuration c2 = canonicalize_config(left2, middle2, right2);
      // Aperiodic points are anchored at the right tail; periodic ones move with the shift.
      if (const auto* p = std::get_if<PeriodicPoint>(&c)) {
        CHECK(c2 == Configuration{shift_point(*p, cut_left)});
      } else {
        CHECK(c2 == c);
      }
    }
  }
}

TEST_CASE("eventually periodic canonical form keeps the defect minimal") {
  const auto zero = canonicalize_point(word_of("0"), 0);
  const auto c = canonicalize_config(zero, word_of("0001000"), zero);
  REQUIRE(std::holds_alternative<EventuallyPeriodicPoint>(c));
  CHECK(std::get<EventuallyPeriodicPoint>(c).defect == word_of("1"));
  const auto& e = std::get<EventuallyPeriodicPoint>(c);
  CHECK(e.at(-1) == Symbol("1"));
  CHECK(e.at(0) == Symbol("0"));
  CHECK(e.at(-2) == Symbol("0"));
}

TEST_CASE("OrbitCount arithmetic is exact") {
  const OrbitCount big = OrbitCount::power_of_two(200);
  CHECK(big.bit_length() == 201);
  CHECK(big.bit(200));
  CHECK(!big.bit(3));
  CHECK((big + big) == OrbitCount::power_of_two(201));
  CHECK(OrbitCount::from_decimal(big.to_decimal()) == big);
  CHECK(OrbitCount::from_decimal("18446744073709551616") == OrbitCount::power_of_two(64));
  CHECK(OrbitCount(3) < OrbitCount(5));
  CHECK((OrbitCount(7) - OrbitCount(2)) == OrbitCount(5));
  CHECK(big.to_u64_saturated() == std::numeric_limits<std::uint64_t>::max());
  CHECK_THROWS_AS(OrbitCount::from_decimal("12a"), Error);
  CHECK_THROWS(OrbitCount(1) - OrbitCount(2));
}

TEST_CASE("CombRep validation") {
  CHECK_NOTHROW(CombRep({CombTerm::parse({"0", "1", "0"})}));
  try {
    CombRep({CombTerm::parse({"0", "", "0"})});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidCombRep);
  }
  // ...0101 0101... is periodic.
  CHECK_THROWS_AS(CombRep({CombTerm::parse({"01", "", "01"})}), Error);
  CHECK_THROWS_AS(CombTerm::parse({"0", "1"}), Error);
  CHECK(CombTerm::parse({"0", "1", "0"}).arity() == 1);
}

TEST_CASE("StructureGraph validation") {
  StructureGraph s = testkit::figure1_structure();
  CHECK_NOTHROW(s.validate());
  CHECK(!s.is_rank_one());
  CHECK(testkit::finite_shift({1, 2, 3}).is_rank_one());

  StructureGraph broken = s;
  const auto twelve = PeriodicOrbit::of(word_of("12"));
  broken.set_transition({twelve, 0}, {twelve, 0}, 3);
  CHECK_THROWS_AS(broken.validate(), Error);

  StructureGraph no_diag = s;
  no_diag.set_transition({twelve, 1}, {twelve, 1}, 0);
  no_diag.set_transition({twelve, 0}, {twelve, 0}, 0);
  CHECK_THROWS_AS(no_diag.validate(), Error);

  StructureGraph unlisted;
  CHECK_THROWS_AS(unlisted.add_transition({twelve, 0}, {twelve, 0}, 1), Error);
}
